#include "glc/complexes.hpp"

#include "glc/errors.hpp"

#include <algorithm>

namespace glc {

namespace {

const FreeModule kEmpty{};

FreeModule concat(const FreeModule& a, const FreeModule& b) {
  FreeModule out = a;
  out.shifts.insert(out.shifts.end(), b.shifts.begin(), b.shifts.end());
  return out;
}

ModuleElement stack(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

const FreeModule& Complex::term(int spot) const {
  if (!in_range(spot)) return kEmpty;
  return terms[static_cast<std::size_t>(spot - lo)];
}

const ModuleMap& Complex::map_at(int spot) const {
  if (spot < lo || spot >= hi()) throw WrongShape("no differential at this spot");
  return maps[static_cast<std::size_t>(spot - lo)];
}

void validate_complex(const QuotientContext& ctx, const Complex& c) {
  if (!c.terms.empty() && c.maps.size() + 1 != c.terms.size())
    throw WrongShape("complex map count mismatch");
  for (std::size_t t = 0; t < c.maps.size(); ++t) {
    if (c.maps[t].src.shifts != c.terms[t].shifts || c.maps[t].tgt.shifts != c.terms[t + 1].shifts)
      throw WrongShape("complex map endpoints disagree with terms");
    c.maps[t].validate(ctx.ring.grading);
  }
  for (std::size_t t = 0; t + 1 < c.maps.size(); ++t) {
    ModuleMap sq = map_compose(ctx.ring.field, c.maps[t + 1], c.maps[t]);
    for (const auto& col : sq.cols)
      for (const auto& p : col)
        if (!nf_poly(ctx, p).is_zero()) throw Error("differential does not square to zero");
  }
}

Complex resolution_as_complex(const Resolution& res) {
  Complex out;
  const std::size_t len = res.terms.size() - 1;
  out.lo = -static_cast<int>(len);
  for (std::size_t a = len + 1; a-- > 0;) out.terms.push_back(res.terms[a]);
  for (std::size_t a = len; a-- > 0;) out.maps.push_back(res.maps[a]);
  return out;
}

Complex twist_complex(const Complex& c, const Multidegree& delta) {
  Complex out = c;
  for (auto& t : out.terms) t = twist(t, delta);
  for (auto& m : out.maps) {
    m.src = twist(m.src, delta);
    m.tgt = twist(m.tgt, delta);
  }
  return out;
}

namespace {

struct Block {
  std::size_t a = 0;  // chain index into f
  std::size_t b = 0;  // chain index into g
  std::size_t offset = 0;
  std::size_t ra = 0;
  std::size_t rb = 0;
};

// Blocks Hom(F_a, G_b) with a - b = i, a ascending.
std::vector<Block> blocks_at(const Resolution& f, const Resolution& g, int i) {
  std::vector<Block> out;
  const int lf = static_cast<int>(f.terms.size()) - 1;
  const int lg = static_cast<int>(g.terms.size()) - 1;
  std::size_t off = 0;
  for (int a = std::max(0, i); a <= std::min(lf, lg + i); ++a) {
    std::size_t b = static_cast<std::size_t>(a - i);
    Block blk;
    blk.a = static_cast<std::size_t>(a);
    blk.b = b;
    blk.offset = off;
    blk.ra = f.terms[blk.a].rank();
    blk.rb = g.terms[b].rank();
    off += blk.ra * blk.rb;
    out.push_back(blk);
  }
  return out;
}

}  // namespace

Complex homgr(const QuotientContext& ctx, const Resolution& f, const Resolution& g) {
  const PrimeField& F = ctx.ring.field;
  const int lf = static_cast<int>(f.terms.size()) - 1;
  const int lg = static_cast<int>(g.terms.size()) - 1;
  Complex c;
  c.lo = -lg;
  for (int i = -lg; i <= lf; ++i) {
    FreeModule term;
    for (const Block& blk : blocks_at(f, g, i))
      for (std::size_t k = 0; k < blk.ra; ++k)
        for (std::size_t l = 0; l < blk.rb; ++l)
          term.shifts.push_back(g.terms[blk.b].shifts[l] - f.terms[blk.a].shifts[k]);
    c.terms.push_back(std::move(term));
  }
  for (int i = -lg; i < lf; ++i) {
    auto src_blocks = blocks_at(f, g, i);
    auto tgt_blocks = blocks_at(f, g, i + 1);
    auto tgt_offset = [&](std::size_t a) -> const Block* {
      for (const Block& blk : tgt_blocks)
        if (blk.a == a) return &blk;
      return nullptr;
    };
    ModuleMap d;
    d.src = c.terms[static_cast<std::size_t>(i + lg)];
    d.tgt = c.terms[static_cast<std::size_t>(i + 1 + lg)];
    d.cols.assign(d.src.rank(), mod_zero(d.tgt.rank()));
    for (const Block& blk : src_blocks) {
      // sign in front of the precomposition differential
      bool even = ((blk.a + blk.b) % 2) == 0;
      for (std::size_t k = 0; k < blk.ra; ++k) {
        for (std::size_t l = 0; l < blk.rb; ++l) {
          std::size_t col = blk.offset + k * blk.rb + l;
          // postcompose with d_G : G_b -> G_{b-1}
          if (blk.b > 0) {
            const Block* t = tgt_offset(blk.a);
            if (t) {
              const ModuleMap& dg = g.maps[blk.b - 1];
              for (std::size_t tt = 0; tt < t->rb; ++tt) {
                const Polynomial& e = dg.cols[l][tt];
                if (e.is_zero()) continue;
                std::size_t row = t->offset + k * t->rb + tt;
                d.cols[col][row] = poly_add(F, d.cols[col][row], e);
              }
            }
          }
          // precompose with d_F : F_{a+1} -> F_a, sign -(-1)^{b-a}
          if (static_cast<int>(blk.a) < lf) {
            const Block* t = tgt_offset(blk.a + 1);
            if (t) {
              const ModuleMap& df = f.maps[blk.a];
              for (std::size_t j = 0; j < t->ra; ++j) {
                const Polynomial& e = df.cols[j][k];
                if (e.is_zero()) continue;
                std::size_t row = t->offset + j * t->rb + l;
                Polynomial signed_e = even ? poly_neg(F, e) : e;
                d.cols[col][row] = poly_add(F, d.cols[col][row], signed_e);
              }
            }
          }
        }
      }
    }
    c.maps.push_back(std::move(d));
  }
  return c;
}

Complex hom_into_free(const QuotientContext& ctx, const Resolution& f, const FreeModule& target) {
  Resolution g;
  g.terms.push_back(target);
  g.complete = true;
  return homgr(ctx, f, g);
}

Complex r_free_replacement(const QuotientContext& ctx, const Complex& a,
                           const Resolution& s_over_r) {
  if (ctx.trivial_quotient()) return a;
  const PrimeField& F = ctx.ring.field;
  const GradingData& grading = ctx.ring.grading;
  QuotientContext rctx{ctx.ring, {}, {}};
  const std::size_t c = s_over_r.terms.size() - 1;

  const int glo = a.lo - static_cast<int>(c);
  const int ghi = a.hi();
  const std::size_t width = static_cast<std::size_t>(ghi - glo + 1);
  std::vector<FreeModule> gt(width);
  // gd[t] : spot glo+t -> glo+t+1 (last slot maps into an empty module)
  std::vector<ModuleMap> gd(width);
  for (std::size_t t = 0; t < width; ++t) gd[t] = map_zero(gt[t], FreeModule{});
  auto idx = [&](int spot) { return static_cast<std::size_t>(spot - glo); };
  auto term_at = [&](int spot) -> const FreeModule& {
    static const FreeModule empty{};
    if (spot < glo || spot > ghi) return empty;
    return gt[idx(spot)];
  };

  for (int s = a.hi(); s >= a.lo; --s) {
    const FreeModule& As = a.term(s);
    const std::size_t ra = As.rank();

    // twisted resolution of the S-free module at spot s: PT[j] sits at s - j
    std::vector<FreeModule> pt(c + 1);
    for (std::size_t j = 0; j <= c; ++j)
      for (std::size_t e = 0; e < ra; ++e)
        for (const auto& sh : s_over_r.terms[j].shifts)
          pt[j].shifts.push_back(sh + As.shifts[e]);
    std::vector<ModuleMap> dp(c + 1);  // dp[j]: PT[j] -> PT[j-1], block diagonal
    for (std::size_t j = 1; j <= c; ++j) {
      dp[j] = map_zero(pt[j], pt[j - 1]);
      const ModuleMap& base = s_over_r.maps[j - 1];
      std::size_t rj = s_over_r.terms[j].rank();
      std::size_t rj1 = s_over_r.terms[j - 1].rank();
      for (std::size_t e = 0; e < ra; ++e)
        for (std::size_t gidx = 0; gidx < rj; ++gidx)
          for (std::size_t tt = 0; tt < rj1; ++tt)
            dp[j].cols[e * rj + gidx][e * rj1 + tt] = base.cols[gidx][tt];
    }

    // u[j] : PT[j] -> G^{s-j+1}
    std::vector<ModuleMap> u(c + 1);
    {
      const FreeModule& tgt1 = term_at(s + 1);
      u[0] = map_zero(pt[0], tgt1);
      const FreeModule& anext = a.term(s + 1);
      bool have_da = s < a.hi() && anext.rank() > 0;
      if (tgt1.rank() > 0 && ra > 0) {
        // augmented system: (D x, phi x) = (0, dA e) modulo J in the A slot
        const FreeModule& tgt2 = term_at(s + 2);
        ModuleMap aug;
        aug.src = tgt1;
        for (const auto& jg : ctx.J_gb) {
          auto jd = poly_degree(grading, jg);
          for (const auto& sh : anext.shifts) aug.src.shifts.push_back(sh + *jd);
        }
        aug.tgt = concat(tgt2, anext);
        const ModuleMap& dnext = gd[idx(s + 1)];
        for (std::size_t t = 0; t < tgt1.rank(); ++t) {
          ModuleElement phi_col = mod_zero(anext.rank());
          if (t < anext.rank()) phi_col[t] = poly_const(ctx.ring.nvars(), 1);
          aug.cols.push_back(stack(dnext.cols[t], phi_col));
        }
        for (const auto& jg : ctx.J_gb) {
          for (std::size_t w = 0; w < anext.rank(); ++w) {
            ModuleElement slack = mod_zero(anext.rank());
            slack[w] = jg;
            aug.cols.push_back(stack(mod_zero(tgt2.rank()), slack));
          }
        }
        Lifter lift(rctx, aug);
        const ModuleMap* da = have_da ? &a.map_at(s) : nullptr;
        for (std::size_t e = 0; e < ra; ++e) {
          ModuleElement rhs = stack(mod_zero(tgt2.rank()),
                                    da ? da->cols[e] : mod_zero(anext.rank()));
          ModuleElement sol = lift.solve(rhs);
          ModuleElement col = mod_zero(tgt1.rank());
          for (std::size_t t = 0; t < tgt1.rank(); ++t) col[t] = sol[t];
          u[0].cols[e] = std::move(col);
        }
      }
    }
    for (std::size_t j = 1; j <= c; ++j) {
      const FreeModule& tgt = term_at(s - static_cast<int>(j) + 1);
      u[j] = map_zero(pt[j], tgt);
      if (pt[j].rank() == 0) continue;
      std::vector<ModuleElement> rhs(pt[j].rank());
      bool all_zero = true;
      for (std::size_t col = 0; col < pt[j].rank(); ++col) {
        ModuleElement w = map_apply(F, u[j - 1], dp[j].cols[col]);
        w = mod_scale(F, F.neg(1), w);
        all_zero = all_zero && mod_is_zero(w);
        rhs[col] = std::move(w);
      }
      if (all_zero) continue;
      if (tgt.rank() == 0) throw Error("internal: cone lift has no room for a nonzero solution");
      Lifter lift(rctx, gd[idx(s - static_cast<int>(j) + 1)]);
      for (std::size_t col = 0; col < pt[j].rank(); ++col) u[j].cols[col] = lift.solve(rhs[col]);
    }

    // assemble new terms and differentials at spots s-c .. s
    std::vector<FreeModule> nt(c + 1);
    for (std::size_t j = 0; j <= c; ++j) nt[j] = concat(pt[j], term_at(s - static_cast<int>(j)));
    for (std::size_t j = 0; j <= c; ++j) {
      int spot = s - static_cast<int>(j);
      const FreeModule& new_tgt = j == 0 ? term_at(s + 1) : nt[j - 1];
      ModuleMap nd;
      nd.src = nt[j];
      nd.tgt = new_tgt;
      std::size_t pt_tgt = j == 0 ? 0 : pt[j - 1].rank();
      for (std::size_t col = 0; col < pt[j].rank(); ++col) {
        ModuleElement top = j == 0 ? mod_zero(0) : dp[j].cols[col];
        nd.cols.push_back(stack(top, u[j].cols[col]));
      }
      const ModuleMap& old = gd[idx(spot)];
      for (std::size_t col = 0; col < old.src.rank(); ++col)
        nd.cols.push_back(stack(mod_zero(pt_tgt), old.cols[col]));
      gt[idx(spot)] = nt[j];
      gd[idx(spot)] = std::move(nd);
    }
    // fix the target of the differential entering spot s - c from below: the
    // spot below never has generators (tails never reach it), nothing to do
  }

  Complex out;
  out.lo = glo;
  out.terms = std::move(gt);
  for (std::size_t t = 0; t + 1 < width; ++t) {
    out.maps.push_back(std::move(gd[t]));
    out.maps.back().tgt = out.terms[t + 1];
  }
  return out;
}

}  // namespace glc
