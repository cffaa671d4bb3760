#include "glc/duality.hpp"

#include "glc/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace glc {

std::vector<Multidegree> degree_window(std::size_t r, std::size_t radius) {
  std::vector<Multidegree> out;
  const long long w = static_cast<long long>(radius);
  std::vector<long long> cur(r, -w);
  while (true) {
    out.push_back(Multidegree(cur));
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == w) cur[--i] = -w;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

Complex omega_dual_complex(const Complex& c, const Multidegree& omega_shift) {
  Complex out;
  out.lo = -c.hi();
  for (int s = c.hi(); s >= c.lo; --s) {
    FreeModule dual;
    for (const auto& sh : c.term(s).shifts) dual.shifts.push_back(omega_shift - sh);
    out.terms.push_back(std::move(dual));
  }
  for (int s = c.hi(); s > c.lo; --s) {
    const ModuleMap& d = c.map_at(s - 1);  // term(s-1) -> term(s)
    ModuleMap dd;
    dd.src = out.terms[static_cast<std::size_t>(c.hi() - s)];
    dd.tgt = out.terms[static_cast<std::size_t>(c.hi() - s + 1)];
    dd.cols.assign(dd.src.rank(), mod_zero(dd.tgt.rank()));
    for (std::size_t k = 0; k < dd.src.rank(); ++k)
      for (std::size_t j = 0; j < dd.tgt.rank(); ++j) dd.cols[k][j] = d.cols[j][k];
    out.maps.push_back(std::move(dd));
  }
  return out;
}

Presentation canonical_module(const QuotientContext& ctx) {
  if (!is_cohen_macaulay(ctx)) throw NotCohenMacaulay("quotient ring is not Cohen-Macaulay");
  const Multidegree sigma = ctx.ring.grading.sigma();
  const std::size_t c = codimension(ctx);
  Presentation pres;
  if (c == 0) {
    pres.f0 = FreeModule{{sigma}};
    return pres;
  }
  Resolution res = s_resolution_over_r(ctx);
  ModuleMap dual = map_dual(res.maps[c - 1]);
  dual.src = twist(dual.src, -sigma);
  dual.tgt = twist(dual.tgt, -sigma);
  pres.f0 = dual.tgt;
  pres.relations = dual.cols;
  return minimal_presentation(ctx, pres);
}

bool presentation_is_free(const Presentation& pres) { return pres.relations.empty(); }

// ----- hypotheses --------------------------------------------------------------

namespace {

bool tor_probe_vanishes(const QuotientContext& ctx, const Presentation& pres_m,
                        const Presentation& omega) {
  const std::size_t imax = krull_dimension(ctx) + 2;
  long long rad = 3;
  for (const auto& s : omega.f0.shifts)
    for (auto x : s.coords()) rad = std::max(rad, std::llabs(x));
  for (const auto& s : pres_m.f0.shifts)
    for (auto x : s.coords()) rad = std::max(rad, std::llabs(x));
  Resolution rm = resolve(ctx, pres_m, imax + 1);
  minimize(ctx, rm);
  PresentedModule b = present(ctx, omega.f0, omega.relations);
  for (std::size_t i = 1; i <= imax; ++i)
    for (const auto& gamma :
         degree_window(ctx.ring.r(), static_cast<std::size_t>(rad)))
      if (tor_dim(ctx, rm, b, i, gamma) != 0) return false;
  return true;
}

}  // namespace

std::string HypothesisReport::failure() const {
  if (!sharp) return "grading is not sharp";
  if (!cohen_macaulay) return "quotient ring is not Cohen-Macaulay";
  if (!branch_m && !branch_n)
    return "neither hypothesis branch holds: no finite projective dimension was certified "
           "for M, and the second branch's Tor vanishing fails or is unavailable";
  return "";
}

HypothesisReport check_hypotheses(const QuotientContext& ctx, const Presentation& pres_m,
                                  const Presentation& pres_n, const GlcOptions& opt) {
  HypothesisReport h;
  h.sharp = is_sharp(ctx.ring.grading);
  h.cohen_macaulay = is_cohen_macaulay(ctx);
  h.pd_m = probe_pd(ctx, pres_m, opt.max_resolution);
  h.pd_n = probe_pd(ctx, pres_n, opt.max_resolution);
  h.branch_m = h.pd_m.status == PdStatus::finite;
  if (h.pd_n.status == PdStatus::finite && h.cohen_macaulay) {
    Presentation omega = canonical_module(ctx);
    h.omega_free = presentation_is_free(omega);
    h.tor_vanishes = h.omega_free ? true : tor_probe_vanishes(ctx, pres_m, omega);
    h.branch_n = *h.tor_vanishes;
  }
  return h;
}

// ----- verifier -----------------------------------------------------------------

std::size_t DualityReport::matched() const {
  std::size_t k = 0;
  for (const auto& c : cells)
    if (c.match) ++k;
  return k;
}

bool DualityReport::all_match() const { return matched() == cells.size(); }

DualityReport verify_duality(const QuotientContext& ctx, const Presentation& pres_m,
                             const Presentation& pres_n, std::size_t window,
                             const GlcOptions& opt) {
  DualityReport rep;
  rep.hyp = check_hypotheses(ctx, pres_m, pres_n, opt);
  if (!rep.hyp.ok()) throw HypothesisViolation(rep.hyp.failure());
  rep.dim_s = krull_dimension(ctx);
  rep.window = window;
  Presentation omega = canonical_module(ctx);
  Presentation mw = tensor_presentation(ctx, pres_m, omega);
  GlcSetup side1 = prepare_glc(ctx, pres_m, pres_n, BlockSel::P, opt);
  GlcSetup side2 = prepare_glc(ctx, pres_n, mw, BlockSel::Q, opt);
  for (std::size_t i = 0; i <= rep.dim_s; ++i) {
    for (const auto& gamma : degree_window(ctx.ring.r(), window)) {
      DualityCell cell;
      cell.i = i;
      cell.gamma = gamma;
      cell.lhs = glc_dim(ctx, side1, i, gamma);
      cell.rhs = glc_dim(ctx, side2, rep.dim_s - i, -gamma);
      cell.match = cell.lhs == cell.rhs;
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

std::optional<Scenario> scenario_from_name(const std::string& name) {
  if (name == "local_duality") return Scenario::local_duality;
  if (name == "serre") return Scenario::serre;
  if (name == "suzuki") return Scenario::suzuki;
  if (name == "herzog_rahimi") return Scenario::herzog_rahimi;
  return std::nullopt;
}

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::local_duality:
      return "local_duality";
    case Scenario::serre:
      return "serre";
    case Scenario::suzuki:
      return "suzuki";
    case Scenario::herzog_rahimi:
      return "herzog_rahimi";
  }
  return "";
}

namespace {

bool presents_the_ring(const QuotientContext& ctx, const Presentation& pres) {
  if (pres.f0.rank() != 1 || !pres.f0.shifts[0].is_zero()) return false;
  for (const auto& rel : pres.relations) {
    ModuleElement v = rel;
    for (auto& p : v) p = nf_poly(ctx, p);
    if (!mod_is_zero(v)) return false;
  }
  return true;
}

}  // namespace

DualityReport run_scenario(const QuotientContext& ctx, Scenario name, const Presentation& pres_m,
                           const Presentation& pres_n, std::size_t window,
                           const GlcOptions& opt) {
  switch (name) {
    case Scenario::local_duality:
    case Scenario::suzuki:
      if (ctx.ring.n() != 0) throw WrongShape("scenario needs an empty y-block (n = 0)");
      break;
    case Scenario::serre:
      if (ctx.ring.m() != 0) throw WrongShape("scenario needs an empty x-block (m = 0)");
      break;
    case Scenario::herzog_rahimi:
      if (!presents_the_ring(ctx, pres_m)) throw WrongShape("scenario needs M = S");
      break;
  }
  return verify_duality(ctx, pres_m, pres_n, window, opt);
}

// ----- explicit pairing ---------------------------------------------------------

namespace {

struct PairingSides {
  LocalizedComplex s1;
  LocalizedComplex s2;
};

PairingSides pairing_sides(const GradingData& g, const Complex& f) {
  PairingSides ps;
  ps.s1 = apply_top_functor(g, f, BlockSel::P);
  ps.s2 = apply_top_functor(g, omega_dual_complex(f, g.sigma()), BlockSel::Q);
  return ps;
}

std::vector<std::pair<std::size_t, Exponents>> basis_or_empty(const GradingData& g,
                                                              const LocalizedComplex& lc, int spot,
                                                              const Multidegree& gamma) {
  if (!lc.in_range(spot)) return {};
  return localized_piece_basis(g, lc.terms[static_cast<std::size_t>(spot - lc.lo)], gamma);
}

// Differential matrix spot -> spot+1 with degenerate spots giving the right
// zero shapes.
Mat matrix_or_zero(const PrimeField& F, const GradingData& g, const LocalizedComplex& lc, int spot,
                   const Multidegree& gamma) {
  std::size_t nsrc = basis_or_empty(g, lc, spot, gamma).size();
  std::size_t ntgt = basis_or_empty(g, lc, spot + 1, gamma).size();
  if (!lc.in_range(spot) || !lc.in_range(spot + 1)) return Mat::zero(ntgt, nsrc);
  return localized_piece_matrix(F, g, lc, spot, gamma);
}

bool dual_exponents(const Exponents& e, const Exponents& f) {
  for (std::size_t v = 0; v < e.size(); ++v)
    if (f[v] != -1 - e[v]) return false;
  return true;
}

Mat pairing_of(const GradingData& g, const PairingSides& ps, int i, const Multidegree& gamma) {
  const int total = static_cast<int>(g.m() + g.n());
  auto b1 = basis_or_empty(g, ps.s1, i, gamma);
  auto b2 = basis_or_empty(g, ps.s2, total - i, -gamma);
  Mat p = Mat::zero(b1.size(), b2.size());
  for (std::size_t r = 0; r < b1.size(); ++r)
    for (std::size_t c = 0; c < b2.size(); ++c)
      if (b1[r].first == b2[c].first && dual_exponents(b1[r].second, b2[c].second)) p.at(r, c) = 1;
  return p;
}

}  // namespace

Mat pairing_matrix(const GradingData& g, const Complex& f, int i, const Multidegree& gamma) {
  return pairing_of(g, pairing_sides(g, f), i, gamma);
}

bool pairing_adjoint(const PrimeField& F, const GradingData& g, const Complex& f, int i,
                     const Multidegree& gamma) {
  PairingSides ps = pairing_sides(g, f);
  const int total = static_cast<int>(g.m() + g.n());
  Mat d1 = matrix_or_zero(F, g, ps.s1, i, gamma);                       // side1: i -> i+1
  Mat d2 = matrix_or_zero(F, g, ps.s2, total - i - 1, -gamma);         // side2: into pairing spot
  Mat p_up = pairing_of(g, ps, i + 1, gamma);
  Mat p_here = pairing_of(g, ps, i, gamma);
  Mat lhs = mat_mul(F, mat_transpose(d1), p_up);
  Mat rhs = mat_mul(F, p_here, d2);
  return lhs.rows == rhs.rows && lhs.cols == rhs.cols && lhs.a == rhs.a;
}

PairingCheck pairing_perfect(const PrimeField& F, const GradingData& g, const Complex& f, int i,
                             const Multidegree& gamma) {
  PairingSides ps = pairing_sides(g, f);
  const int total = static_cast<int>(g.m() + g.n());
  auto cohomology_basis = [&](const LocalizedComplex& lc, int spot, const Multidegree& deg) {
    Mat out = matrix_or_zero(F, g, lc, spot, deg);
    Mat in = matrix_or_zero(F, g, lc, spot - 1, deg);
    std::vector<std::vector<Scalar>> image;
    for (std::size_t j = 0; j < in.cols; ++j) {
      std::vector<Scalar> col(in.rows);
      for (std::size_t r = 0; r < in.rows; ++r) col[r] = in.at(r, j);
      image.push_back(std::move(col));
    }
    return complement_basis(F, image, nullspace(F, out));
  };
  auto h1 = cohomology_basis(ps.s1, i, gamma);
  auto h2 = cohomology_basis(ps.s2, total - i, -gamma);
  Mat p = pairing_of(g, ps, i, gamma);
  Mat induced = Mat::zero(h1.size(), h2.size());
  for (std::size_t a = 0; a < h1.size(); ++a)
    for (std::size_t b = 0; b < h2.size(); ++b) {
      Scalar sum = 0;
      for (std::size_t r = 0; r < p.rows; ++r)
        for (std::size_t c = 0; c < p.cols; ++c)
          sum = F.add(sum, F.mul(h1[a][r], F.mul(p.at(r, c), h2[b][c])));
      induced.at(a, b) = sum;
    }
  PairingCheck check;
  check.h1 = h1.size();
  check.h2 = h2.size();
  check.rank = mat_rank(F, induced);
  check.perfect = check.rank == check.h1 && check.rank == check.h2;
  return check;
}

}  // namespace glc
