#pragma once

#include "glc/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace glc {

struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> a;  // row-major

  static Mat zero(std::size_t r, std::size_t c) { return Mat{r, c, std::vector<Scalar>(r * c, 0)}; }

  Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Scalar at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

Mat mat_mul(const PrimeField& F, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
Mat mat_from_cols(std::size_t dim, const std::vector<std::vector<Scalar>>& cols);

std::size_t mat_rank(const PrimeField& F, Mat A);

// Basis of the right kernel {v : Av = 0}.
std::vector<std::vector<Scalar>> nullspace(const PrimeField& F, const Mat& A);

// One solution of Ax = b, if any.
std::optional<std::vector<Scalar>> mat_solve(const PrimeField& F, const Mat& A,
                                             const std::vector<Scalar>& b);

// Subset of `ext` whose images are independent modulo the span of `base`;
// together with `base` they span span(base) + span(ext).
std::vector<std::vector<Scalar>> complement_basis(const PrimeField& F,
                                                  const std::vector<std::vector<Scalar>>& base,
                                                  const std::vector<std::vector<Scalar>>& ext);

}  // namespace glc
