#pragma once

#include "glc/polynomial.hpp"

#include <vector>

namespace glc {

// F = R(-shifts[0]) + ... + R(-shifts[rank-1]); generator i has degree shifts[i].
struct FreeModule {
  std::vector<Multidegree> shifts;

  std::size_t rank() const { return shifts.size(); }

  static FreeModule of_rank(std::size_t rank, std::size_t grading_rank) {
    return FreeModule{std::vector<Multidegree>(rank, Multidegree::zero(grading_rank))};
  }
};

// Shift every generator degree down by delta; F(delta) as a twist.
FreeModule twist(const FreeModule& f, const Multidegree& delta);

// A graded map src -> tgt. Column j is the image of the j-th generator of src,
// written in the generators of tgt; entry (i, j) must be homogeneous of degree
// src.shifts[j] - tgt.shifts[i].
struct ModuleMap {
  FreeModule src;
  FreeModule tgt;
  std::vector<ModuleElement> cols;

  const Polynomial& entry(std::size_t i, std::size_t j) const { return cols[j][i]; }

  // Throws DegreeMismatch if some entry is not homogeneous of the right degree
  // and WrongShape on dimension problems.
  void validate(const GradingData& g) const;
};

ModuleMap map_zero(FreeModule src, FreeModule tgt);
ModuleMap map_identity(const FreeModule& f, std::size_t nvars);
ModuleMap map_compose(const PrimeField& F, const ModuleMap& a, const ModuleMap& b);  // a after b
ModuleMap map_add(const PrimeField& F, const ModuleMap& a, const ModuleMap& b);
ModuleMap map_scale(const PrimeField& F, Scalar c, const ModuleMap& a);
ModuleElement map_apply(const PrimeField& F, const ModuleMap& a, const ModuleElement& v);

// Transpose with the generator degrees negated: Hom(F, R) has generator
// degrees -shifts. Entry (i, j) of the result is entry (j, i) of the input.
ModuleMap map_dual(const ModuleMap& a);

}  // namespace glc
