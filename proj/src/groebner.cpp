#include "glc/groebner.hpp"

#include "glc/errors.hpp"

#include <algorithm>
#include <limits>

namespace glc {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Core division: full normal form of v against selected basis elements and
// the J reducers of the context. J reducers take precedence, which keeps the
// traces of elements of J * F free of basis coefficients. `skip` excludes one
// basis element (used during inter-reduction).
Division divide_impl(const QuotientContext& ctx, const std::vector<GBElement>& elems,
                     std::size_t skip, ModuleElement v, bool with_trace) {
  const PrimeField& F = ctx.ring.field;
  Division d;
  if (with_trace) d.quot.assign(elems.size(), Polynomial());
  d.rem = mod_zero(v.size());
  while (!mod_is_zero(v)) {
    ModuleTerm lt = mod_lead(v);
    const Polynomial* jr = nullptr;
    for (const auto& h : ctx.J_gb) {
      if (mono_divides(h.lead().mono, lt.mono)) {
        jr = &h;
        break;
      }
    }
    if (jr) {
      Exponents sh = mono_div(lt.mono, jr->lead().mono);
      v[lt.comp] = poly_sub(F, v[lt.comp], poly_term_mul(F, sh, lt.coeff, *jr));
      continue;
    }
    bool reduced = false;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (k == skip) continue;
      const GBElement& g = elems[k];
      if (g.lt.comp != lt.comp || !mono_divides(g.lt.mono, lt.mono)) continue;
      Exponents sh = mono_div(lt.mono, g.lt.mono);
      v = mod_sub(F, v, mod_term_mul(F, sh, lt.coeff, g.elt));
      if (with_trace) d.quot[k] = poly_add(F, d.quot[k], poly_monomial(sh, lt.coeff));
      reduced = true;
      break;
    }
    if (reduced) continue;
    Polynomial t = poly_monomial(lt.mono, lt.coeff);
    d.rem[lt.comp] = poly_add(F, d.rem[lt.comp], t);
    v[lt.comp] = poly_sub(F, v[lt.comp], t);
  }
  return d;
}

struct Pair {
  std::size_t i = 0;
  std::size_t j = 0;  // basis index, or J index when mixed
  bool mixed = false;
  long long weight = 0;
  std::size_t seq = 0;
};

struct BuchbergerState {
  const QuotientContext* ctx;
  std::vector<Multidegree> shifts;
  std::vector<GBElement> basis;
  std::vector<ModuleElement> expr;  // over the original generators
  std::size_t orig_count = 0;
  std::vector<Pair> queue;
  std::size_t seq = 0;

  const PrimeField& field() const { return ctx->ring.field; }

  void push_pairs_for(std::size_t k) {
    const ModuleTerm& lk = basis[k].lt;
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].lt.comp != lk.comp) continue;
      Exponents l = mono_lcm(basis[i].lt.mono, lk.mono);
      queue.push_back(Pair{i, k, false, total_weight(l), seq++});
    }
    for (std::size_t h = 0; h < ctx->J_gb.size(); ++h) {
      Exponents l = mono_lcm(ctx->J_gb[h].lead().mono, lk.mono);
      queue.push_back(Pair{k, h, true, total_weight(l), seq++});
    }
  }

  // Reduce a candidate fully; if nonzero, normalize monic and append.
  void candidate(ModuleElement elt, ModuleElement trace) {
    Division d = divide_impl(*ctx, basis, npos, std::move(elt), true);
    if (mod_is_zero(d.rem)) return;
    const PrimeField& F = field();
    Scalar inv = F.inv(mod_lead(d.rem).coeff);
    ModuleElement g = mod_scale(F, inv, d.rem);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (d.quot[k].is_zero()) continue;
      ModuleElement prod(trace.size());
      for (std::size_t c = 0; c < trace.size(); ++c)
        prod[c] = poly_mul(F, d.quot[k], expr[k][c]);
      trace = mod_sub(F, trace, prod);
    }
    trace = mod_scale(F, inv, trace);
    auto deg = mod_degree(ctx->ring.grading, shifts, g);
    if (!deg) throw DegreeMismatch("groebner candidate is not homogeneous");
    ModuleTerm lt = mod_lead(g);
    basis.push_back(GBElement{std::move(g), std::move(lt), *deg});
    expr.push_back(std::move(trace));
    push_pairs_for(basis.size() - 1);
  }

  // S-element of a pair together with its trace over the original generators.
  std::pair<ModuleElement, ModuleElement> spair(const Pair& p) const {
    const PrimeField& F = field();
    const GBElement& gi = basis[p.i];
    if (!p.mixed) {
      const GBElement& gj = basis[p.j];
      Exponents l = mono_lcm(gi.lt.mono, gj.lt.mono);
      Exponents ui = mono_div(l, gi.lt.mono);
      Exponents uj = mono_div(l, gj.lt.mono);
      ModuleElement s =
          mod_sub(F, mod_term_mul(F, ui, 1, gi.elt), mod_term_mul(F, uj, 1, gj.elt));
      ModuleElement tr =
          mod_sub(F, mod_term_mul(F, ui, 1, expr[p.i]), mod_term_mul(F, uj, 1, expr[p.j]));
      return {std::move(s), std::move(tr)};
    }
    const Polynomial& h = ctx->J_gb[p.j];
    Exponents l = mono_lcm(gi.lt.mono, h.lead().mono);
    Exponents ui = mono_div(l, gi.lt.mono);
    Exponents uh = mono_div(l, h.lead().mono);
    ModuleElement s = mod_term_mul(F, ui, 1, gi.elt);
    s[gi.lt.comp] = poly_sub(F, s[gi.lt.comp], poly_term_mul(F, uh, 1, h));
    ModuleElement tr = mod_term_mul(F, ui, 1, expr[p.i]);
    return {std::move(s), std::move(tr)};
  }

  void run() {
    while (!queue.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < queue.size(); ++k) {
        if (queue[k].weight < queue[best].weight ||
            (queue[k].weight == queue[best].weight && queue[k].seq < queue[best].seq))
          best = k;
      }
      Pair p = queue[best];
      queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
      auto [s, tr] = spair(p);
      candidate(std::move(s), std::move(tr));
    }
  }

  // Drop elements whose lead is divisible by another's, then reduce tails.
  void interreduce() {
    const PrimeField& F = field();
    std::vector<bool> alive(basis.size(), true);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (std::size_t l = 0; l < basis.size() && alive[k]; ++l) {
        if (l == k || !alive[l]) continue;
        const ModuleTerm& a = basis[l].lt;
        const ModuleTerm& b = basis[k].lt;
        if (a.comp != b.comp || !mono_divides(a.mono, b.mono)) continue;
        if (a.mono == b.mono && l > k) continue;  // equal leads: keep the earlier
        alive[k] = false;
      }
    }
    std::vector<GBElement> nb;
    std::vector<ModuleElement> ne;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!alive[k]) continue;
      nb.push_back(std::move(basis[k]));
      ne.push_back(std::move(expr[k]));
    }
    basis = std::move(nb);
    expr = std::move(ne);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Division d = divide_impl(*ctx, basis, k, basis[k].elt, true);
      // lead survives (no other lead divides it); remainder is the reduced form
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (d.quot[l].is_zero()) continue;
        ModuleElement prod(expr[k].size());
        for (std::size_t c = 0; c < expr[k].size(); ++c)
          prod[c] = poly_mul(F, d.quot[l], expr[l][c]);
        expr[k] = mod_sub(F, expr[k], prod);
      }
      basis[k].elt = std::move(d.rem);
      basis[k].lt = mod_lead(basis[k].elt);
    }
  }

  std::vector<ModuleElement> syzygies() {
    const PrimeField& F = field();
    std::vector<ModuleElement> out;
    const std::size_t t = basis.size();
    auto record = [&](const Pair& p) {
      auto [s, tr] = spair(p);
      (void)tr;
      Division d = divide_impl(*ctx, basis, npos, std::move(s), true);
      if (!mod_is_zero(d.rem)) throw Error("internal: S-element of a Groebner basis not reducing to zero");
      ModuleElement syz = mod_zero(t);
      const GBElement& gi = basis[p.i];
      if (!p.mixed) {
        const GBElement& gj = basis[p.j];
        Exponents l = mono_lcm(gi.lt.mono, gj.lt.mono);
        syz[p.i] = poly_monomial(mono_div(l, gi.lt.mono), 1);
        syz[p.j] = poly_sub(F, syz[p.j], poly_monomial(mono_div(l, gj.lt.mono), 1));
      } else {
        const Polynomial& h = ctx->J_gb[p.j];
        Exponents l = mono_lcm(gi.lt.mono, h.lead().mono);
        syz[p.i] = poly_monomial(mono_div(l, gi.lt.mono), 1);
      }
      for (std::size_t k = 0; k < t; ++k)
        if (!d.quot[k].is_zero()) syz[k] = poly_sub(F, syz[k], d.quot[k]);
      for (auto& c : syz) c = nf_poly(*ctx, c);
      if (!mod_is_zero(syz)) out.push_back(std::move(syz));
    };
    for (std::size_t k = 0; k < t; ++k) {
      for (std::size_t i = 0; i < k; ++i)
        if (basis[i].lt.comp == basis[k].lt.comp) record(Pair{i, k, false, 0, 0});
      for (std::size_t h = 0; h < ctx->J_gb.size(); ++h) record(Pair{k, h, true, 0, 0});
    }
    return out;
  }
};

}  // namespace

Division divide(const QuotientContext& ctx, const GroebnerBasis& gb, ModuleElement v,
                bool with_trace) {
  return divide_impl(ctx, gb.elems, npos, std::move(v), with_trace);
}

ModuleElement nf_mod(const QuotientContext& ctx, const GroebnerBasis& gb, ModuleElement v) {
  return divide_impl(ctx, gb.elems, npos, std::move(v), false).rem;
}

Polynomial nf_poly(const QuotientContext& ctx, const Polynomial& p) {
  if (ctx.J_gb.empty() || p.is_zero()) return p;
  ModuleElement v{p};
  return divide_impl(ctx, {}, npos, std::move(v), false).rem[0];
}

GBResult module_groebner(const QuotientContext& ctx, const std::vector<Multidegree>& tgt_shifts,
                         const std::vector<ModuleElement>& gens, bool with_syzygies) {
  BuchbergerState st;
  st.ctx = &ctx;
  st.shifts = tgt_shifts;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != tgt_shifts.size()) throw WrongShape("generator rank mismatch");
    if (mod_is_zero(gens[j])) continue;
    if (!mod_degree(ctx.ring.grading, tgt_shifts, gens[j]))
      throw DegreeMismatch("generator " + std::to_string(j) + " is not homogeneous");
  }
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (mod_is_zero(gens[j])) continue;
    ModuleElement tr = mod_zero(gens.size());
    tr[j] = poly_const(ctx.ring.nvars(), 1);
    st.candidate(gens[j], std::move(tr));
  }
  st.run();
  st.interreduce();

  GBResult res;
  res.gb.tgt_rank = tgt_shifts.size();
  res.gb.elems = st.basis;
  res.expr = st.expr;
  if (with_syzygies) res.syzygies = st.syzygies();
  return res;
}

Lifter::Lifter(const QuotientContext& ctx, ModuleMap map) : ctx_(&ctx), src_rank_(map.src.rank()) {
  GBResult r = module_groebner(ctx, map.tgt.shifts, map.cols, false);
  gb_ = std::move(r.gb);
  expr_ = std::move(r.expr);
}

ModuleElement Lifter::solve(const ModuleElement& v) const {
  Division d = divide(*ctx_, gb_, v, true);
  if (!mod_is_zero(d.rem)) throw NotInSubmodule("element is not in the image");
  const PrimeField& F = ctx_->ring.field;
  ModuleElement u = mod_zero(src_rank_);
  for (std::size_t k = 0; k < gb_.size(); ++k) {
    if (d.quot[k].is_zero()) continue;
    for (std::size_t c = 0; c < src_rank_; ++c)
      u[c] = poly_add(F, u[c], poly_mul(F, d.quot[k], expr_[k][c]));
  }
  for (auto& c : u) c = nf_poly(*ctx_, c);
  return u;
}

bool Lifter::contains(const ModuleElement& v) const {
  return mod_is_zero(divide(*ctx_, gb_, v, false).rem);
}

QuotientContext QuotientContext::make(RingSpec ring, std::vector<Polynomial> J) {
  QuotientContext ctx{std::move(ring), {}, {}};
  std::vector<Polynomial> gens;
  for (auto& p : J) {
    if (p.is_zero()) continue;
    if (!poly_degree(ctx.ring.grading, p))
      throw DegreeMismatch("quotient ideal generator is not homogeneous");
    gens.push_back(std::move(p));
  }
  if (gens.empty()) return ctx;
  std::vector<ModuleElement> wrapped;
  for (auto& p : gens) wrapped.push_back(ModuleElement{p});
  GBResult r = module_groebner(ctx, {Multidegree::zero(ctx.ring.r())}, wrapped, false);
  for (auto& e : r.gb.elems) {
    if (total_weight(e.lt.mono) == 0) throw Error("quotient ring is zero");
    ctx.J_gb.push_back(std::move(e.elt[0]));
  }
  ctx.J_gens = std::move(gens);
  return ctx;
}

}  // namespace glc
