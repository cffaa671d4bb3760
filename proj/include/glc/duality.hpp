#pragma once

#include "glc/localcohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace glc {

// All degrees of the hypercube [-radius, radius]^r in lexicographic order.
std::vector<Multidegree> degree_window(std::size_t r, std::size_t radius);

// Hom(C, R(-omega_shift)) of a complex of free modules: terms reversed, maps
// transposed, a generator of shift s turning into one of shift
// omega_shift - s. The differential is the plain transpose, which squares to
// zero and differs from the signed Hom convention by a diagonal change of
// basis, so cohomology dimensions are unaffected.
Complex omega_dual_complex(const Complex& c, const Multidegree& omega_shift);

// Minimal presentation of omega_S = Ext^c_R(S, omega_R), c = codim S.
// Throws NotCohenMacaulay when S fails the dimension test.
Presentation canonical_module(const QuotientContext& ctx);

// True when the (minimal) presentation has no relations, i.e. the module is
// free of rank f0.rank().
bool presentation_is_free(const Presentation& pres);

// ----- hypothesis checking ----------------------------------------------------

struct HypothesisReport {
  bool sharp = false;
  bool cohen_macaulay = false;
  PdProbe pd_m;
  PdProbe pd_n;
  bool omega_free = false;
  // Engaged only when the second branch is attempted. When omega_S is free
  // the answer is exact; otherwise Tor_i(M, omega_S) is probed over a finite
  // window of homological and internal degrees.
  std::optional<bool> tor_vanishes;
  bool branch_m = false;  // M has finite projective dimension
  bool branch_n = false;  // N has finite pd and Tor_{>0}(M, omega_S) vanishes

  bool ok() const { return sharp && cohen_macaulay && (branch_m || branch_n); }
  std::string failure() const;
};

HypothesisReport check_hypotheses(const QuotientContext& ctx, const Presentation& pres_m,
                                  const Presentation& pres_n, const GlcOptions& opt);

// ----- the verifier -----------------------------------------------------------

struct DualityCell {
  std::size_t i = 0;
  Multidegree gamma;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool match = false;
};

struct DualityReport {
  HypothesisReport hyp;
  std::size_t dim_s = 0;
  std::size_t window = 0;
  std::vector<DualityCell> cells;

  std::size_t matched() const;
  bool all_match() const;
};

// For every i in [0, dim S] and gamma in the radius-`window` hypercube,
// compare dim H^i_p(M, N)_gamma with dim H^{dim S - i}_q(N, M (x) omega_S)_{-gamma}.
// Throws HypothesisViolation when check_hypotheses fails.
DualityReport verify_duality(const QuotientContext& ctx, const Presentation& pres_m,
                             const Presentation& pres_n, std::size_t window,
                             const GlcOptions& opt);

enum class Scenario { local_duality, serre, suzuki, herzog_rahimi };

std::optional<Scenario> scenario_from_name(const std::string& name);
const char* scenario_name(Scenario s);

// Classical corollaries as degenerate-block instances of verify_duality:
// local_duality and suzuki need n = 0, serre needs m = 0, herzog_rahimi
// needs M = S. Throws WrongShape when the precondition fails.
DualityReport run_scenario(const QuotientContext& ctx, Scenario name, const Presentation& pres_m,
                           const Presentation& pres_n, std::size_t window, const GlcOptions& opt);

// ----- the explicit pairing (free case, S = R) --------------------------------

// Matrix of the chain-level pairing between the degree-gamma piece of
// H^m_p applied to f at spot i and the degree-(-gamma) piece of H^n_q applied
// to Hom(f, omega_R) at spot m + n - i. Rows index the first side, columns
// the second; the entry is 1 exactly when the generator indices agree and the
// exponent vectors are coordinatewise dual (e <-> -1-e).
Mat pairing_matrix(const GradingData& g, const Complex& f, int i, const Multidegree& gamma);

// Exact adjointness of the pairing with the two truncated differentials:
// <D1 x, y> = <x, D2 y> as matrices.
bool pairing_adjoint(const PrimeField& F, const GradingData& g, const Complex& f, int i,
                     const Multidegree& gamma);

struct PairingCheck {
  std::size_t h1 = 0;    // dim of the first cohomology side
  std::size_t h2 = 0;    // dim of the second side
  std::size_t rank = 0;  // rank of the induced pairing on cohomology
  bool perfect = false;
};

// Perfection of the induced pairing on cohomology at spot i, degree gamma.
PairingCheck pairing_perfect(const PrimeField& F, const GradingData& g, const Complex& f, int i,
                             const Multidegree& gamma);

}  // namespace glc
