#pragma once

#include <cstdint>

#include "glc/errors.hpp"

namespace glc {

// Coefficient value in [0, p). Canonical representative, always reduced.
using Scalar = std::uint32_t;

// Arithmetic in F_p for a word-sized prime p (default used by callers: 32003).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2) throw Error("field characteristic must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw Error("field characteristic must be prime");
  }

  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1 % p_; }

  Scalar from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
  }

  Scalar add(Scalar a, Scalar b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }

  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }

  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }

  // Extended Euclid; throws DivisionByZero on 0.
  Scalar inv(Scalar a) const {
    if (a == 0) throw DivisionByZero();
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += p_;
    return static_cast<Scalar>(t);
  }

  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace glc
