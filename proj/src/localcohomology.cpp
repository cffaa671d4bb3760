#include "glc/localcohomology.hpp"

#include "glc/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace glc {

// ----- presented modules -----------------------------------------------------

PresentedModule present(const QuotientContext& ctx, FreeModule f0,
                        const std::vector<ModuleElement>& rels) {
  GBResult r = module_groebner(ctx, f0.shifts, rels, false);
  return PresentedModule{std::move(f0), std::move(r.gb)};
}

std::vector<std::pair<std::size_t, Exponents>> piece_basis(const QuotientContext& ctx,
                                                           const PresentedModule& pm,
                                                           const Multidegree& gamma) {
  const GradingData& g = ctx.ring.grading;
  std::vector<std::pair<std::size_t, Exponents>> out;
  Region nonneg = nonnegative_region(g);
  for (std::size_t comp = 0; comp < pm.f0.rank(); ++comp) {
    for (const auto& e : enumerate_region(g, nonneg, gamma - pm.f0.shifts[comp])) {
      bool standard = true;
      for (const auto& h : ctx.J_gb)
        if (mono_divides(h.lead().mono, e)) {
          standard = false;
          break;
        }
      for (std::size_t k = 0; standard && k < pm.gb.size(); ++k) {
        const ModuleTerm& lt = pm.gb.elems[k].lt;
        if (lt.comp == comp && mono_divides(lt.mono, e)) standard = false;
      }
      if (standard) out.emplace_back(comp, e);
    }
  }
  return out;
}

std::vector<Scalar> piece_coords(const QuotientContext& ctx, const PresentedModule& pm,
                                 const std::vector<std::pair<std::size_t, Exponents>>& basis,
                                 const ModuleElement& v) {
  std::map<std::pair<std::size_t, Exponents>, std::size_t> lookup;
  for (std::size_t i = 0; i < basis.size(); ++i) lookup[basis[i]] = i;
  ModuleElement w = nf_mod(ctx, pm.gb, v);
  std::vector<Scalar> coords(basis.size(), 0);
  for (std::size_t comp = 0; comp < w.size(); ++comp) {
    for (const auto& t : w[comp].terms()) {
      auto it = lookup.find({comp, t.mono});
      if (it == lookup.end())
        throw WrongShape("normal form has a term outside the graded piece basis");
      coords[it->second] = t.coeff;
    }
  }
  return coords;
}

// ----- localized complexes ---------------------------------------------------

std::size_t block_size(const GradingData& g, BlockSel b) { return b == BlockSel::P ? g.m() : g.n(); }

Region block_region(const GradingData& g, BlockSel b) {
  return b == BlockSel::P ? p_negative_region(g) : q_negative_region(g);
}

LocalizedComplex apply_top_functor(const GradingData& g, const Complex& c, BlockSel block) {
  LocalizedComplex lc;
  lc.lo = c.lo + static_cast<int>(block_size(g, block));
  Region reg = block_region(g, block);
  for (const auto& t : c.terms) {
    std::vector<LocalizedGen> gens;
    gens.reserve(t.rank());
    for (const auto& s : t.shifts) gens.push_back(LocalizedGen{s, reg});
    lc.terms.push_back(std::move(gens));
  }
  lc.maps = c.maps;
  return lc;
}

std::vector<std::pair<std::size_t, Exponents>> localized_piece_basis(
    const GradingData& g, const std::vector<LocalizedGen>& term, const Multidegree& gamma) {
  std::vector<std::pair<std::size_t, Exponents>> out;
  for (std::size_t i = 0; i < term.size(); ++i)
    for (const auto& e : enumerate_region(g, term[i].region, gamma - term[i].shift))
      out.emplace_back(i, e);
  return out;
}

Mat localized_piece_matrix(const PrimeField& F, const GradingData& g, const LocalizedComplex& lc,
                           int spot, const Multidegree& gamma) {
  const auto& src_term = lc.terms[static_cast<std::size_t>(spot - lc.lo)];
  const auto& tgt_term = lc.terms[static_cast<std::size_t>(spot + 1 - lc.lo)];
  const ModuleMap& d = lc.maps[static_cast<std::size_t>(spot - lc.lo)];
  auto src = localized_piece_basis(g, src_term, gamma);
  auto tgt = localized_piece_basis(g, tgt_term, gamma);
  std::map<std::pair<std::size_t, Exponents>, std::size_t> lookup;
  for (std::size_t i = 0; i < tgt.size(); ++i) lookup[tgt[i]] = i;
  Mat A = Mat::zero(tgt.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    std::size_t j = src[col].first;
    const Exponents& e = src[col].second;
    for (std::size_t i = 0; i < tgt_term.size(); ++i) {
      const Polynomial& p = d.cols[j][i];
      if (p.is_zero()) continue;
      for (const auto& t : p.terms()) {
        Exponents f = mono_mul(e, t.mono);
        bool keep = true;
        for (std::size_t v = 0; v < f.size(); ++v) {
          switch (tgt_term[i].region[v]) {
            case VarSign::NegOne:
              if (f[v] >= 0) keep = false;
              break;
            case VarSign::NonNeg:
              if (f[v] < 0) throw Error("internal: truncation hit a nonnegative coordinate");
              break;
            case VarSign::Free:
              break;
          }
          if (!keep) break;
        }
        if (!keep) continue;
        auto it = lookup.find({i, f});
        if (it == lookup.end()) throw Error("internal: image term missing from piece basis");
        A.at(it->second, col) = F.add(A.at(it->second, col), t.coeff);
      }
    }
  }
  return A;
}

std::size_t localized_cohomology_dim(const PrimeField& F, const GradingData& g,
                                     const LocalizedComplex& lc, int spot,
                                     const Multidegree& gamma) {
  if (!lc.in_range(spot)) return 0;
  const auto& term = lc.terms[static_cast<std::size_t>(spot - lc.lo)];
  std::size_t dim = localized_piece_basis(g, term, gamma).size();
  std::size_t rank_out = 0, rank_in = 0;
  if (spot < lc.hi()) rank_out = mat_rank(F, localized_piece_matrix(F, g, lc, spot, gamma));
  if (spot > lc.lo) rank_in = mat_rank(F, localized_piece_matrix(F, g, lc, spot - 1, gamma));
  return dim - rank_out - rank_in;
}

// ----- dimension and friends -------------------------------------------------

std::size_t krull_dimension(const QuotientContext& ctx) {
  const std::size_t nv = ctx.ring.nvars();
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << nv); ++mask) {
    bool ok = true;
    for (const auto& h : ctx.J_gb) {
      bool inside = true;
      const Exponents& lm = h.lead().mono;
      for (std::size_t v = 0; v < nv; ++v)
        if (lm[v] > 0 && !(mask & (std::size_t{1} << v))) {
          inside = false;
          break;
        }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

std::size_t codimension(const QuotientContext& ctx) {
  return ctx.ring.nvars() - krull_dimension(ctx);
}

Resolution s_resolution_over_r(const QuotientContext& ctx) {
  QuotientContext rctx{ctx.ring, {}, {}};
  Presentation pres;
  pres.f0 = FreeModule{{Multidegree::zero(ctx.ring.r())}};
  for (const auto& p : ctx.J_gens) pres.relations.push_back(ModuleElement{p});
  Resolution res = resolve(rctx, pres, ctx.ring.nvars() + 1);
  if (!res.complete) throw Error("internal: resolution over the polynomial ring did not end");
  minimize(rctx, res);
  return res;
}

bool is_cohen_macaulay(const QuotientContext& ctx) {
  Resolution res = s_resolution_over_r(ctx);
  auto pd = projective_dimension(res);
  return pd && *pd == codimension(ctx);
}

PdProbe probe_pd(const QuotientContext& ctx, const Presentation& pres, std::size_t bound) {
  Resolution res = resolve(ctx, pres, bound);
  minimize(ctx, res);
  auto pd = projective_dimension(res);
  if (pd) return PdProbe{PdStatus::finite, *pd};
  return PdProbe{PdStatus::exceeded_bound, 0};
}

// ----- pipeline ---------------------------------------------------------------

GlcSetup prepare_glc(const QuotientContext& ctx, const Presentation& pres_m,
                     const Presentation& pres_n, BlockSel block, const GlcOptions& opt) {
  Resolution rm = resolve(ctx, pres_m, opt.max_resolution);
  minimize(ctx, rm);
  Resolution rn = resolve(ctx, pres_n, opt.max_resolution);
  minimize(ctx, rn);
  auto pd_m = projective_dimension(rm);
  auto pd_n = projective_dimension(rn);
  if (!pd_m && !pd_n)
    throw HypothesisViolation(
        "neither argument has finite projective dimension within the probe bound");
  std::size_t pd_side = pd_m ? *pd_m : *pd_n;
  std::size_t dim = krull_dimension(ctx);
  std::size_t t = pd_side + std::max({dim, ctx.ring.m(), ctx.ring.n()}) + 1 + opt.trunc_extra;
  t = std::max(t, ctx.ring.m() + ctx.ring.n() + 2 + opt.trunc_extra);
  if (!rm.complete && rm.length() < t) {
    rm = resolve(ctx, pres_m, t);
    minimize(ctx, rm);
  }
  if (!rn.complete && rn.length() < t) {
    rn = resolve(ctx, pres_n, t);
    minimize(ctx, rn);
  }
  Complex a = homgr(ctx, rm, rn);
  Complex g = ctx.trivial_quotient() ? a : r_free_replacement(ctx, a, s_resolution_over_r(ctx));
  GlcSetup setup;
  setup.lc = apply_top_functor(ctx.ring.grading, g, block);
  setup.truncation = t;
  setup.pd_m = pd_m;
  return setup;
}

std::size_t glc_dim(const QuotientContext& ctx, const GlcSetup& setup, std::size_t i,
                    const Multidegree& gamma) {
  return localized_cohomology_dim(ctx.ring.field, ctx.ring.grading, setup.lc,
                                  static_cast<int>(i), gamma);
}

// ----- oracles ----------------------------------------------------------------

namespace {

// Matrix of Hom(F_i, B)_gamma -> Hom(F_{i+1}, B)_gamma.
Mat ext_matrix(const QuotientContext& ctx, const Resolution& fa, const PresentedModule& b,
               std::size_t i, const Multidegree& gamma) {
  const PrimeField& F = ctx.ring.field;
  const FreeModule& fi = fa.terms[i];
  const FreeModule& fi1 = fa.terms[i + 1];
  const ModuleMap& d = fa.maps[i];
  std::vector<std::vector<std::pair<std::size_t, Exponents>>> src_bases(fi.rank());
  std::vector<std::size_t> src_off(fi.rank() + 1, 0);
  for (std::size_t j = 0; j < fi.rank(); ++j) {
    src_bases[j] = piece_basis(ctx, b, gamma + fi.shifts[j]);
    src_off[j + 1] = src_off[j] + src_bases[j].size();
  }
  std::vector<std::vector<std::pair<std::size_t, Exponents>>> tgt_bases(fi1.rank());
  std::vector<std::size_t> tgt_off(fi1.rank() + 1, 0);
  for (std::size_t k = 0; k < fi1.rank(); ++k) {
    tgt_bases[k] = piece_basis(ctx, b, gamma + fi1.shifts[k]);
    tgt_off[k + 1] = tgt_off[k] + tgt_bases[k].size();
  }
  Mat A = Mat::zero(tgt_off.back(), src_off.back());
  for (std::size_t j = 0; j < fi.rank(); ++j) {
    for (std::size_t s = 0; s < src_bases[j].size(); ++s) {
      const auto& belt = src_bases[j][s];
      for (std::size_t k = 0; k < fi1.rank(); ++k) {
        const Polynomial& p = d.cols[k][j];
        if (p.is_zero()) continue;
        ModuleElement v = mod_zero(b.f0.rank());
        v[belt.first] = poly_term_mul(F, belt.second, 1, p);
        std::vector<Scalar> coords = piece_coords(ctx, b, tgt_bases[k], v);
        for (std::size_t r = 0; r < coords.size(); ++r)
          if (coords[r] != 0)
            A.at(tgt_off[k] + r, src_off[j] + s) = F.add(A.at(tgt_off[k] + r, src_off[j] + s),
                                                         coords[r]);
      }
    }
  }
  return A;
}

std::size_t hom_piece_dim(const QuotientContext& ctx, const Resolution& fa,
                          const PresentedModule& b, std::size_t i, const Multidegree& gamma) {
  if (i >= fa.terms.size()) return 0;
  std::size_t dim = 0;
  for (const auto& s : fa.terms[i].shifts) dim += piece_basis(ctx, b, gamma + s).size();
  return dim;
}

}  // namespace

std::size_t ext_dim(const QuotientContext& ctx, const Resolution& fa, const PresentedModule& b,
                    std::size_t i, const Multidegree& gamma) {
  const PrimeField& F = ctx.ring.field;
  std::size_t dim = hom_piece_dim(ctx, fa, b, i, gamma);
  if (dim == 0) return 0;
  std::size_t rank_out = 0, rank_in = 0;
  if (i + 1 < fa.terms.size()) rank_out = mat_rank(F, ext_matrix(ctx, fa, b, i, gamma));
  if (i > 0) rank_in = mat_rank(F, ext_matrix(ctx, fa, b, i - 1, gamma));
  return dim - rank_out - rank_in;
}

std::size_t tor_dim(const QuotientContext& ctx, const Resolution& fm, const PresentedModule& b,
                    std::size_t i, const Multidegree& gamma) {
  const PrimeField& F = ctx.ring.field;
  if (i >= fm.terms.size()) return 0;
  // F_i tensor B in degree gamma; the differential contracts toward F_{i-1}
  auto tensor_basis_dim = [&](std::size_t idx) {
    std::size_t dim = 0;
    if (idx >= fm.terms.size()) return dim;
    for (const auto& s : fm.terms[idx].shifts) dim += piece_basis(ctx, b, gamma - s).size();
    return dim;
  };
  auto tensor_matrix = [&](std::size_t idx) {
    // F_idx tensor B -> F_{idx-1} tensor B
    const FreeModule& fi = fm.terms[idx];
    const FreeModule& fo = fm.terms[idx - 1];
    const ModuleMap& d = fm.maps[idx - 1];
    std::vector<std::vector<std::pair<std::size_t, Exponents>>> src_bases(fi.rank());
    std::vector<std::size_t> src_off(fi.rank() + 1, 0);
    for (std::size_t j = 0; j < fi.rank(); ++j) {
      src_bases[j] = piece_basis(ctx, b, gamma - fi.shifts[j]);
      src_off[j + 1] = src_off[j] + src_bases[j].size();
    }
    std::vector<std::vector<std::pair<std::size_t, Exponents>>> tgt_bases(fo.rank());
    std::vector<std::size_t> tgt_off(fo.rank() + 1, 0);
    for (std::size_t tt = 0; tt < fo.rank(); ++tt) {
      tgt_bases[tt] = piece_basis(ctx, b, gamma - fo.shifts[tt]);
      tgt_off[tt + 1] = tgt_off[tt] + tgt_bases[tt].size();
    }
    Mat A = Mat::zero(tgt_off.back(), src_off.back());
    for (std::size_t j = 0; j < fi.rank(); ++j) {
      for (std::size_t s = 0; s < src_bases[j].size(); ++s) {
        const auto& belt = src_bases[j][s];
        for (std::size_t tt = 0; tt < fo.rank(); ++tt) {
          const Polynomial& p = d.cols[j][tt];
          if (p.is_zero()) continue;
          ModuleElement v = mod_zero(b.f0.rank());
          v[belt.first] = poly_term_mul(F, belt.second, 1, p);
          std::vector<Scalar> coords = piece_coords(ctx, b, tgt_bases[tt], v);
          for (std::size_t r = 0; r < coords.size(); ++r)
            if (coords[r] != 0)
              A.at(tgt_off[tt] + r, src_off[j] + s) =
                  F.add(A.at(tgt_off[tt] + r, src_off[j] + s), coords[r]);
        }
      }
    }
    return A;
  };
  std::size_t dim = tensor_basis_dim(i);
  if (dim == 0) return 0;
  std::size_t rank_out = 0, rank_in = 0;
  if (i > 0) rank_out = mat_rank(F, tensor_matrix(i));
  if (i + 1 < fm.terms.size()) rank_in = mat_rank(F, tensor_matrix(i + 1));
  return dim - rank_out - rank_in;
}

namespace {

void block_monomials(const GradingData& g, BlockSel block, std::size_t t,
                     std::vector<Exponents>& out) {
  std::vector<std::size_t> vars;
  std::size_t nv = g.nvars();
  for (std::size_t v = 0; v < nv; ++v) {
    bool in_p = v < g.m();
    if ((block == BlockSel::P && in_p) || (block == BlockSel::Q && !in_p)) vars.push_back(v);
  }
  Exponents cur(nv, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t left) {
    if (idx + 1 == vars.size()) {
      cur[vars[idx]] = static_cast<int>(left);
      out.push_back(cur);
      cur[vars[idx]] = 0;
      return;
    }
    for (std::size_t take = 0; take <= left; ++take) {
      cur[vars[idx]] = static_cast<int>(take);
      rec(idx + 1, left - take);
    }
    cur[vars[idx]] = 0;
  };
  if (vars.empty()) return;
  rec(0, t);
}

}  // namespace

ExtLimit ext_limit_oracle(const QuotientContext& ctx, const Presentation& pres_m,
                          const Presentation& pres_n, BlockSel block, std::size_t i,
                          const Multidegree& gamma, std::size_t t_max) {
  ExtLimit lim;
  PresentedModule b = present(ctx, pres_n.f0, pres_n.relations);
  for (std::size_t t = 1; t <= t_max; ++t) {
    Presentation quot = pres_m;
    std::vector<Exponents> monos;
    block_monomials(ctx.ring.grading, block, t, monos);
    for (const auto& mono : monos) {
      for (std::size_t j = 0; j < pres_m.f0.rank(); ++j) {
        ModuleElement col = mod_zero(pres_m.f0.rank());
        col[j] = nf_poly(ctx, poly_monomial(mono, 1));
        if (!mod_is_zero(col)) quot.relations.push_back(std::move(col));
      }
    }
    Resolution r = resolve(ctx, quot, i + 1);
    minimize(ctx, r);
    lim.dims.push_back(ext_dim(ctx, r, b, i, gamma));
  }
  lim.stabilized = lim.dims.size() >= 2 &&
                   lim.dims[lim.dims.size() - 1] == lim.dims[lim.dims.size() - 2];
  return lim;
}

std::size_t ext_limit_value(const QuotientContext& ctx, const Presentation& pres_m,
                            const Presentation& pres_n, BlockSel block, std::size_t i,
                            const Multidegree& gamma, std::size_t t_max) {
  ExtLimit lim = ext_limit_oracle(ctx, pres_m, pres_n, block, i, gamma, t_max);
  if (!lim.stabilized)
    throw Unstabilized("direct limit did not stabilize within the iteration bound");
  return lim.dims.back();
}

}  // namespace glc
