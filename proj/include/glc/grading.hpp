#pragma once

#include <optional>
#include <vector>

#include "glc/multidegree.hpp"

namespace glc {

// Degrees of the two variable blocks x_1..x_m (the p-block) and y_1..y_n
// (the q-block) in Z^r. Variables are indexed 0..m+n-1, x-block first.
struct GradingData {
  std::vector<Multidegree> deg_x;
  std::vector<Multidegree> deg_y;

  std::size_t r() const;
  std::size_t m() const { return deg_x.size(); }
  std::size_t n() const { return deg_y.size(); }
  std::size_t nvars() const { return deg_x.size() + deg_y.size(); }
  const Multidegree& var_degree(std::size_t v) const;
  bool is_x_var(std::size_t v) const { return v < deg_x.size(); }

  // Sum of all variable degrees; the canonical twist of the ambient ring.
  Multidegree sigma() const;

  void validate() const;  // consistent ranks, at least rank 1
};

// Sign pattern of an exponent region, one entry per variable.
//   NonNeg: exponent >= 0
//   NegOne: exponent <= -1
//   Free:   exponent unrestricted (localized variable)
enum class VarSign : unsigned char { NonNeg, NegOne, Free };
using Region = std::vector<VarSign>;

Region nonnegative_region(const GradingData& g);
Region p_negative_region(const GradingData& g);  // x <= -1, y >= 0
Region q_negative_region(const GradingData& g);  // x >= 0, y <= -1

// Exponent vector over Z, length m+n.
using Exponents = std::vector<int>;

// Sharpness of the grading: every set
//   {(a,b) >= 0 : sum a_i deg(x_i) = gamma + sum b_j deg(y_j)}
// is finite. Equivalent (recession cone form, decided exactly): the only
// nonnegative solution of sum a_i deg(x_i) - sum b_j deg(y_j) = 0 is zero.
bool is_sharp(const GradingData& g);

// A nonzero nonnegative integer witness (a_1..a_m, b_1..b_n) with
// sum a_i deg(x_i) = sum b_j deg(y_j), if the grading is not sharp.
std::optional<std::vector<long long>> sharpness_witness(const GradingData& g);

// Whether every graded piece cut out by the region is a finite set
// (pointedness of the recession cone, exact rational test).
bool region_is_finite(const GradingData& g, const Region& region);

// All exponent vectors in the region of total degree gamma, sorted
// lexicographically. Throws NonFiniteRegion when pieces are infinite.
std::vector<Exponents> enumerate_region(const GradingData& g, const Region& region,
                                        const Multidegree& gamma);

}  // namespace glc
