#include "glc/resolutions.hpp"

#include "glc/errors.hpp"

#include <algorithm>

namespace glc {

namespace {

bool is_unit_entry(const Polynomial& p) {
  return p.size() == 1 && total_weight(p.terms()[0].mono) == 0;
}

}  // namespace

Resolution resolve(const QuotientContext& ctx, const Presentation& pres, std::size_t max_len) {
  Resolution res;
  res.terms.push_back(pres.f0);
  std::vector<ModuleElement> gens = pres.relations;
  for (std::size_t step = 0; step < max_len; ++step) {
    bool any = false;
    for (const auto& g : gens) any = any || !mod_is_zero(g);
    if (!any) {
      res.complete = true;
      return res;
    }
    GBResult r = module_groebner(ctx, res.terms.back().shifts, gens, true);
    FreeModule next;
    for (const auto& e : r.gb.elems) next.shifts.push_back(e.degree);
    ModuleMap d;
    d.src = next;
    d.tgt = res.terms.back();
    for (const auto& e : r.gb.elems) d.cols.push_back(e.elt);
    res.terms.push_back(std::move(next));
    res.maps.push_back(std::move(d));
    gens = std::move(r.syzygies);
  }
  bool any = false;
  for (const auto& g : gens) any = any || !mod_is_zero(g);
  res.complete = !any;
  return res;
}

void minimize(const QuotientContext& ctx, Resolution& res) {
  const PrimeField& F = ctx.ring.field;
  for (;;) {
    bool pivoted = false;
    for (std::size_t i = 0; i < res.maps.size() && !pivoted; ++i) {
      ModuleMap& D = res.maps[i];
      std::size_t prow = 0, pcol = 0;
      bool found = false;
      for (std::size_t c = 0; c < D.cols.size() && !found; ++c)
        for (std::size_t r = 0; r < D.cols[c].size() && !found; ++r)
          if (is_unit_entry(D.cols[c][r])) {
            prow = r;
            pcol = c;
            found = true;
          }
      if (!found) continue;
      pivoted = true;

      Scalar uinv = F.inv(D.cols[pcol][prow].terms()[0].coeff);
      // clear the pivot row by column operations; the pivot column dies with
      // the pivot, and neighbors are only affected in slices that die too
      for (std::size_t j = 0; j < D.cols.size(); ++j) {
        if (j == pcol || D.cols[j][prow].is_zero()) continue;
        Polynomial lam = poly_scale(F, uinv, D.cols[j][prow]);
        for (std::size_t r = 0; r < D.cols[j].size(); ++r) {
          D.cols[j][r] = poly_sub(F, D.cols[j][r], poly_mul(F, lam, D.cols[pcol][r]));
          D.cols[j][r] = nf_poly(ctx, D.cols[j][r]);
        }
      }

      // delete generator pcol of terms[i+1] and generator prow of terms[i]
      D.cols.erase(D.cols.begin() + static_cast<std::ptrdiff_t>(pcol));
      for (auto& col : D.cols) col.erase(col.begin() + static_cast<std::ptrdiff_t>(prow));
      res.terms[i + 1].shifts.erase(res.terms[i + 1].shifts.begin() +
                                    static_cast<std::ptrdiff_t>(pcol));
      res.terms[i].shifts.erase(res.terms[i].shifts.begin() +
                                static_cast<std::ptrdiff_t>(prow));
      if (i + 1 < res.maps.size()) {
        for (auto& col : res.maps[i + 1].cols)
          col.erase(col.begin() + static_cast<std::ptrdiff_t>(pcol));
      }
      if (i > 0) {
        res.maps[i - 1].cols.erase(res.maps[i - 1].cols.begin() +
                                   static_cast<std::ptrdiff_t>(prow));
      }
      for (std::size_t k = 0; k < res.maps.size(); ++k) {
        res.maps[k].src = res.terms[k + 1];
        res.maps[k].tgt = res.terms[k];
      }
    }
    if (!pivoted) break;
  }
  // drop empty tail terms; an empty tail means the resolution actually ends
  while (!res.maps.empty() && res.terms.back().rank() == 0) {
    res.terms.pop_back();
    res.maps.pop_back();
    res.complete = true;
  }
}

std::optional<std::size_t> projective_dimension(const Resolution& res) {
  if (!res.complete) return std::nullopt;
  std::size_t pd = 0;
  for (std::size_t i = 0; i < res.terms.size(); ++i)
    if (res.terms[i].rank() > 0) pd = i;
  return pd;
}

std::map<Multidegree, std::size_t> graded_betti(const Resolution& res, std::size_t i) {
  std::map<Multidegree, std::size_t> out;
  if (i >= res.terms.size()) return out;
  for (const auto& s : res.terms[i].shifts) ++out[s];
  return out;
}

Presentation tensor_presentation(const QuotientContext& ctx, const Presentation& a,
                                 const Presentation& b) {
  Presentation t;
  const std::size_t ra = a.f0.rank();
  const std::size_t rb = b.f0.rank();
  t.f0.shifts.reserve(ra * rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j) t.f0.shifts.push_back(a.f0.shifts[i] + b.f0.shifts[j]);
  for (const auto& u : a.relations) {
    for (std::size_t j = 0; j < rb; ++j) {
      ModuleElement col = mod_zero(ra * rb);
      for (std::size_t i = 0; i < ra; ++i) col[i * rb + j] = nf_poly(ctx, u[i]);
      if (!mod_is_zero(col)) t.relations.push_back(std::move(col));
    }
  }
  for (const auto& v : b.relations) {
    for (std::size_t i = 0; i < ra; ++i) {
      ModuleElement col = mod_zero(ra * rb);
      for (std::size_t j = 0; j < rb; ++j) col[i * rb + j] = nf_poly(ctx, v[j]);
      if (!mod_is_zero(col)) t.relations.push_back(std::move(col));
    }
  }
  return t;
}

Presentation minimal_presentation(const QuotientContext& ctx, Presentation pres) {
  const PrimeField& F = ctx.ring.field;
  for (auto& col : pres.relations)
    for (auto& p : col) p = nf_poly(ctx, p);
  for (;;) {
    std::size_t prow = 0, pcol = 0;
    bool found = false;
    for (std::size_t c = 0; c < pres.relations.size() && !found; ++c)
      for (std::size_t r = 0; r < pres.relations[c].size() && !found; ++r)
        if (is_unit_entry(pres.relations[c][r])) {
          prow = r;
          pcol = c;
          found = true;
        }
    if (!found) break;
    Scalar uinv = F.inv(pres.relations[pcol][prow].terms()[0].coeff);
    for (std::size_t j = 0; j < pres.relations.size(); ++j) {
      if (j == pcol || pres.relations[j][prow].is_zero()) continue;
      Polynomial lam = poly_scale(F, uinv, pres.relations[j][prow]);
      for (std::size_t r = 0; r < pres.relations[j].size(); ++r) {
        pres.relations[j][r] =
            nf_poly(ctx, poly_sub(F, pres.relations[j][r], poly_mul(F, lam, pres.relations[pcol][r])));
      }
    }
    pres.relations.erase(pres.relations.begin() + static_cast<std::ptrdiff_t>(pcol));
    for (auto& col : pres.relations)
      col.erase(col.begin() + static_cast<std::ptrdiff_t>(prow));
    pres.f0.shifts.erase(pres.f0.shifts.begin() + static_cast<std::ptrdiff_t>(prow));
  }
  std::vector<ModuleElement> keep;
  for (auto& col : pres.relations)
    if (!mod_is_zero(col)) keep.push_back(std::move(col));
  pres.relations = std::move(keep);
  return pres;
}

}  // namespace glc
