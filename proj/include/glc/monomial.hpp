#pragma once

#include "glc/grading.hpp"

#include <numeric>
#include <string>

namespace glc {

// Monomials are exponent vectors over the full variable list x_1..x_m,y_1..y_n.

inline long long total_weight(const Exponents& e) {
  long long s = 0;
  for (int v : e) s += v;
  return s;
}

// Graded reverse lexicographic order with the all-ones weight. Returns +1 if
// a > b, -1 if a < b, 0 on equality. Higher total degree wins; on ties the
// monomial with the smaller exponent at the last differing variable is larger.
inline int cmp_grevlex(const Exponents& a, const Exponents& b) {
  long long wa = total_weight(a), wb = total_weight(b);
  if (wa != wb) return wa > wb ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

inline bool mono_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents mono_mul(const Exponents& a, const Exponents& b) {
  Exponents c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Exponents mono_div(const Exponents& a, const Exponents& b) {
  Exponents c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Exponents mono_lcm(const Exponents& a, const Exponents& b) {
  Exponents c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] > b[i] ? a[i] : b[i];
  return c;
}

inline Multidegree mono_degree(const GradingData& g, const Exponents& e) {
  Multidegree d = Multidegree::zero(g.r());
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    const Multidegree& dv = g.var_degree(v);
    for (std::size_t i = 0; i < d.rank(); ++i) d.coords()[i] += dv[i] * e[v];
  }
  return d;
}

}  // namespace glc
