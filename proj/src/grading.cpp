#include "glc/grading.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>

namespace glc {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// ----- exact feasibility simplex ------------------------------------------
// Standard form: A x = b, x >= 0. Phase-1 with Bland's rule (no cycling).

struct FeasResult {
  bool feasible = false;
  std::vector<Rational> x;
};

FeasResult lp_feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t rows = A.size();
  const std::size_t ncols = rows == 0 ? 0 : A[0].size();
  if (rows == 0) return {true, std::vector<Rational>(ncols, 0)};

  for (std::size_t i = 0; i < rows; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& v : A[i]) v = -v;
    }
  }

  // Tableau columns: originals, then one artificial per row, then rhs.
  const std::size_t total = ncols + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(total + 1, 0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) t[i][j] = A[i][j];
    t[i][ncols + i] = 1;
    t[i][total] = b[i];
    basis[i] = ncols + i;
  }

  auto is_artificial = [&](std::size_t j) { return j >= ncols; };

  for (;;) {
    // reduced cost of column j for the phase-1 objective (sum of artificials)
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j) {
      Rational r = is_artificial(j) ? Rational(1) : Rational(0);
      for (std::size_t i = 0; i < rows; ++i)
        if (is_artificial(basis[i])) r -= t[i][j];
      if (r < 0) {
        enter = j;
        break;  // Bland: smallest index
      }
    }
    if (enter == total) break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] > 0) {
        Rational ratio = t[i][total] / t[i][enter];
        if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave == rows) throw Error("phase-1 simplex unbounded");

    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rational opt = 0;
  for (std::size_t i = 0; i < rows; ++i)
    if (is_artificial(basis[i])) opt += t[i][total];
  if (opt != 0) return {false, {}};

  FeasResult res;
  res.feasible = true;
  res.x.assign(ncols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < ncols) res.x[basis[i]] = t[i][total];
  return res;
}

// ----- small exact linear algebra over Q -----------------------------------

std::size_t rational_rank(std::vector<std::vector<Rational>> mat) {
  std::size_t rows = mat.size();
  if (rows == 0) return 0;
  std::size_t cols = mat[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && mat[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(mat[rank], mat[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || mat[i][c] == 0) continue;
      Rational f = mat[i][c] / mat[rank][c];
      for (std::size_t j = c; j < cols; ++j) mat[i][j] -= f * mat[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Solve sum_j x_j col_j = target for full-column-rank columns; empty result on
// inconsistency. Columns are vectors in Q^r.
std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& cols,
                                                 std::vector<Rational> target) {
  const std::size_t r = target.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(k + 1, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = cols[j][i];
    m[i][k] = target[i];
  }
  std::vector<long long> pivot_row(k, -1);
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < r; ++c) {
    std::size_t piv = row;
    while (piv < r && m[piv][c] == 0) ++piv;
    if (piv == r) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[row][c];
      for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_row[c] = static_cast<long long>(row);
    ++row;
  }
  std::vector<Rational> sol(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    if (pivot_row[c] < 0) return std::nullopt;  // rank-deficient: caller guarantees not
    std::size_t i = static_cast<std::size_t>(pivot_row[c]);
    sol[c] = m[i][k] / m[i][c];
  }
  // consistency: verify the candidate actually solves the system
  for (std::size_t i = 0; i < r; ++i) {
    Rational acc = 0;
    for (std::size_t c = 0; c < k; ++c) acc += sol[c] * cols[c][i];
    if (acc != target[i]) return std::nullopt;
  }
  return sol;
}

std::vector<Rational> to_rational(const Multidegree& d) {
  std::vector<Rational> v(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) v[i] = d[i];
  return v;
}

// Gordan functional: lambda with lambda.col >= 1 on constrained columns and
// lambda.col = 0 on free columns. Exists iff the recession cone is trivial.
std::optional<std::vector<Rational>> gordan_functional(
    const std::vector<std::vector<Rational>>& constrained,
    const std::vector<std::vector<Rational>>& free_cols, std::size_t r) {
  // variables: lambda+ (r), lambda- (r), slack per constrained column
  const std::size_t nc = constrained.size();
  const std::size_t nf = free_cols.size();
  const std::size_t nvars = 2 * r + nc;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (std::size_t v = 0; v < nc; ++v) {
    std::vector<Rational> row(nvars, 0);
    for (std::size_t i = 0; i < r; ++i) {
      row[i] = constrained[v][i];
      row[r + i] = -constrained[v][i];
    }
    row[2 * r + v] = -1;
    A.push_back(std::move(row));
    b.push_back(1);
  }
  for (std::size_t f = 0; f < nf; ++f) {
    std::vector<Rational> row(nvars, 0);
    for (std::size_t i = 0; i < r; ++i) {
      row[i] = free_cols[f][i];
      row[r + i] = -free_cols[f][i];
    }
    A.push_back(std::move(row));
    b.push_back(0);
  }
  auto res = lp_feasible(std::move(A), std::move(b));
  if (!res.feasible) return std::nullopt;
  std::vector<Rational> lambda(r);
  for (std::size_t i = 0; i < r; ++i) lambda[i] = res.x[i] - res.x[r + i];
  return lambda;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::size_t GradingData::r() const {
  if (!deg_x.empty()) return deg_x[0].rank();
  if (!deg_y.empty()) return deg_y[0].rank();
  return 0;
}

const Multidegree& GradingData::var_degree(std::size_t v) const {
  return v < deg_x.size() ? deg_x[v] : deg_y[v - deg_x.size()];
}

Multidegree GradingData::sigma() const {
  Multidegree s = Multidegree::zero(r());
  for (const auto& d : deg_x) s = s + d;
  for (const auto& d : deg_y) s = s + d;
  return s;
}

void GradingData::validate() const {
  std::size_t rr = r();
  if (rr == 0) throw Error("grading rank must be at least 1");
  for (const auto& d : deg_x)
    if (d.rank() != rr) throw Error("inconsistent degree ranks in x block");
  for (const auto& d : deg_y)
    if (d.rank() != rr) throw Error("inconsistent degree ranks in y block");
}

Region nonnegative_region(const GradingData& g) {
  return Region(g.nvars(), VarSign::NonNeg);
}

Region p_negative_region(const GradingData& g) {
  Region reg(g.nvars(), VarSign::NonNeg);
  for (std::size_t i = 0; i < g.m(); ++i) reg[i] = VarSign::NegOne;
  return reg;
}

Region q_negative_region(const GradingData& g) {
  Region reg(g.nvars(), VarSign::NonNeg);
  for (std::size_t j = 0; j < g.n(); ++j) reg[g.m() + j] = VarSign::NegOne;
  return reg;
}

std::optional<std::vector<long long>> sharpness_witness(const GradingData& g) {
  const std::size_t r = g.r();
  const std::size_t k = g.nvars();
  if (k == 0) return std::nullopt;
  // columns deg(x_i), -deg(y_j); rows: r equalities plus sum v = 1
  std::vector<std::vector<Rational>> A(r + 1, std::vector<Rational>(k, 0));
  std::vector<Rational> b(r + 1, 0);
  for (std::size_t v = 0; v < k; ++v) {
    const Multidegree& d = g.var_degree(v);
    for (std::size_t i = 0; i < r; ++i) A[i][v] = g.is_x_var(v) ? Rational(d[i]) : Rational(-d[i]);
    A[r][v] = 1;
  }
  b[r] = 1;
  auto res = lp_feasible(std::move(A), std::move(b));
  if (!res.feasible) return std::nullopt;

  BigInt lcm_den = 1;
  for (const auto& q : res.x)
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(q));
  std::vector<long long> w(k);
  for (std::size_t v = 0; v < k; ++v) {
    BigInt val = boost::multiprecision::numerator(res.x[v]) *
                 (lcm_den / boost::multiprecision::denominator(res.x[v]));
    w[v] = val.convert_to<long long>();
  }
  return w;
}

bool is_sharp(const GradingData& g) { return !sharpness_witness(g).has_value(); }

namespace {

struct RegionColumns {
  std::vector<std::size_t> constrained_vars;       // variable indices
  std::vector<std::vector<Rational>> constrained;  // +deg (NonNeg) or -deg (NegOne)
  std::vector<std::size_t> free_vars;
  std::vector<std::vector<Rational>> free_cols;
};

RegionColumns region_columns(const GradingData& g, const Region& region) {
  if (region.size() != g.nvars()) throw Error("region length does not match variable count");
  RegionColumns rc;
  for (std::size_t v = 0; v < region.size(); ++v) {
    auto col = to_rational(g.var_degree(v));
    switch (region[v]) {
      case VarSign::NonNeg:
        rc.constrained_vars.push_back(v);
        rc.constrained.push_back(col);
        break;
      case VarSign::NegOne:
        for (auto& c : col) c = -c;
        rc.constrained_vars.push_back(v);
        rc.constrained.push_back(col);
        break;
      case VarSign::Free:
        rc.free_vars.push_back(v);
        rc.free_cols.push_back(col);
        break;
    }
  }
  return rc;
}

}  // namespace

bool region_is_finite(const GradingData& g, const Region& region) {
  auto rc = region_columns(g, region);
  const std::size_t r = g.r();
  if (rational_rank(rc.free_cols) != rc.free_cols.size()) return false;
  if (rc.constrained.empty()) return true;
  // nonzero recession direction with a constrained component, normalized
  const std::size_t nc = rc.constrained.size();
  const std::size_t nf = rc.free_cols.size();
  const std::size_t nvars = nc + 2 * nf;
  std::vector<std::vector<Rational>> A(r + 1, std::vector<Rational>(nvars, 0));
  std::vector<Rational> b(r + 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t v = 0; v < nc; ++v) A[i][v] = rc.constrained[v][i];
    for (std::size_t f = 0; f < nf; ++f) {
      A[i][nc + 2 * f] = rc.free_cols[f][i];
      A[i][nc + 2 * f + 1] = -rc.free_cols[f][i];
    }
  }
  for (std::size_t v = 0; v < nc; ++v) A[r][v] = 1;
  b[r] = 1;
  return !lp_feasible(std::move(A), std::move(b)).feasible;
}

std::vector<Exponents> enumerate_region(const GradingData& g, const Region& region,
                                        const Multidegree& gamma) {
  if (gamma.rank() != g.r()) throw Error("degree rank does not match grading");
  if (!region_is_finite(g, region))
    throw NonFiniteRegion("region has infinite graded pieces for this grading");

  auto rc = region_columns(g, region);
  const std::size_t r = g.r();
  const std::size_t k = g.nvars();

  // substituted target: gamma + sum of deg(v) over NegOne variables
  std::vector<Rational> target = to_rational(gamma);
  for (std::size_t v = 0; v < k; ++v)
    if (region[v] == VarSign::NegOne) {
      const Multidegree& d = g.var_degree(v);
      for (std::size_t i = 0; i < r; ++i) target[i] += d[i];
    }

  std::vector<Exponents> out;
  if (k == 0) {
    bool zero = true;
    for (const auto& t : target) zero = zero && (t == 0);
    if (zero) out.push_back(Exponents{});
    return out;
  }

  std::vector<Rational> lambda;
  std::vector<Rational> lam_cols;  // lambda . constrained column, each >= 1
  if (!rc.constrained.empty()) {
    auto lam = gordan_functional(rc.constrained, rc.free_cols, r);
    if (!lam) throw Error("internal: pointed region without a separating functional");
    lambda = *lam;
    for (const auto& col : rc.constrained) lam_cols.push_back(dot(lambda, col));
  }

  const std::size_t nc = rc.constrained.size();
  std::vector<long long> u(nc, 0);
  std::vector<Rational> rho = target;

  auto emit = [&](const std::vector<Rational>& rem) {
    std::vector<long long> freevals(rc.free_vars.size(), 0);
    if (!rc.free_vars.empty()) {
      auto sol = solve_exact(rc.free_cols, rem);
      if (!sol) return;
      for (std::size_t f = 0; f < sol->size(); ++f) {
        if (boost::multiprecision::denominator((*sol)[f]) != 1) return;
        freevals[f] = boost::multiprecision::numerator((*sol)[f]).convert_to<long long>();
      }
    } else {
      for (const auto& x : rem)
        if (x != 0) return;
    }
    Exponents e(k, 0);
    for (std::size_t v = 0; v < nc; ++v) {
      std::size_t var = rc.constrained_vars[v];
      e[var] = region[var] == VarSign::NegOne ? static_cast<int>(-1 - u[v])
                                              : static_cast<int>(u[v]);
    }
    for (std::size_t f = 0; f < rc.free_vars.size(); ++f)
      e[rc.free_vars[f]] = static_cast<int>(freevals[f]);
    out.push_back(std::move(e));
  };

  // DFS over constrained exponents with the lambda budget as the bound.
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t idx, Rational budget) {
    if (budget < 0) return;
    if (idx == nc) {
      emit(rho);
      return;
    }
    for (long long val = 0;; ++val) {
      Rational cost = lam_cols[idx] * val;
      if (cost > budget) break;
      u[idx] = val;
      std::vector<Rational> saved = rho;
      for (std::size_t i = 0; i < r; ++i) rho[i] = saved[i] - rc.constrained[idx][i] * val;
      rec(idx + 1, budget - cost);
      rho = saved;
    }
    u[idx] = 0;
  };

  Rational budget = rc.constrained.empty() ? Rational(0) : dot(lambda, target);
  if (rc.constrained.empty()) {
    emit(rho);
  } else {
    rec(0, budget);
  }

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace glc
