#include "glc/linalg.hpp"

#include "glc/errors.hpp"

namespace glc {

Mat mat_mul(const PrimeField& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw WrongShape("matrix product shape mismatch");
  Mat C = Mat::zero(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      Scalar aik = A.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

Mat mat_transpose(const Mat& A) {
  Mat T = Mat::zero(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Mat mat_from_cols(std::size_t dim, const std::vector<std::vector<Scalar>>& cols) {
  Mat A = Mat::zero(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw WrongShape("column length mismatch");
    for (std::size_t i = 0; i < dim; ++i) A.at(i, j) = cols[j][i];
  }
  return A;
}

namespace {

// Reduce A in place to row echelon form; returns pivot column per used row.
std::vector<std::size_t> echelon(const PrimeField& F, Mat& A) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols && row < A.rows; ++col) {
    std::size_t sel = row;
    while (sel < A.rows && A.at(sel, col) == 0) ++sel;
    if (sel == A.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(row, j), A.at(sel, j));
    Scalar inv = F.inv(A.at(row, col));
    for (std::size_t j = col; j < A.cols; ++j) A.at(row, j) = F.mul(inv, A.at(row, j));
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == row || A.at(i, col) == 0) continue;
      Scalar f = A.at(i, col);
      for (std::size_t j = col; j < A.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t mat_rank(const PrimeField& F, Mat A) { return echelon(F, A).size(); }

std::vector<std::vector<Scalar>> nullspace(const PrimeField& F, const Mat& A) {
  Mat R = A;
  std::vector<std::size_t> pivots = echelon(F, R);
  std::vector<bool> is_pivot(A.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(A.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(R.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> mat_solve(const PrimeField& F, const Mat& A,
                                             const std::vector<Scalar>& b) {
  if (b.size() != A.rows) throw WrongShape("solve rhs length mismatch");
  Mat Ab = Mat::zero(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) Ab.at(i, j) = A.at(i, j);
    Ab.at(i, A.cols) = b[i];
  }
  std::vector<std::size_t> pivots = echelon(F, Ab);
  for (std::size_t c : pivots)
    if (c == A.cols) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(A.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = Ab.at(r, A.cols);
  return x;
}

std::vector<std::vector<Scalar>> complement_basis(const PrimeField& F,
                                                  const std::vector<std::vector<Scalar>>& base,
                                                  const std::vector<std::vector<Scalar>>& ext) {
  // incremental elimination: keep reduced independent vectors with pivots
  std::vector<std::vector<Scalar>> reduced;
  std::vector<std::size_t> pivot_pos;
  auto insert = [&](std::vector<Scalar> v) -> bool {
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      Scalar c = v[pivot_pos[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, reduced[k][j]));
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    Scalar inv = F.inv(v[p]);
    for (auto& c : v) c = F.mul(inv, c);
    reduced.push_back(std::move(v));
    pivot_pos.push_back(p);
    return true;
  };
  for (const auto& v : base) insert(v);
  std::vector<std::vector<Scalar>> out;
  for (const auto& v : ext)
    if (insert(v)) out.push_back(v);
  return out;
}

}  // namespace glc
