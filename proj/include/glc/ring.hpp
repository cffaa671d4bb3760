#pragma once

#include "glc/field.hpp"
#include "glc/grading.hpp"

#include <string>

namespace glc {

// A graded polynomial ring k[x_1..x_m, y_1..y_n] over a prime field, with the
// multigrading carried by GradingData. Quotients are handled separately by
// passing a Groebner basis of the defining ideal alongside the ring.
struct RingSpec {
  GradingData grading;
  PrimeField field;

  RingSpec(GradingData g, PrimeField f) : grading(std::move(g)), field(f) { grading.validate(); }

  std::size_t nvars() const { return grading.nvars(); }
  std::size_t m() const { return grading.m(); }
  std::size_t n() const { return grading.n(); }
  std::size_t r() const { return grading.r(); }

  std::string var_name(std::size_t v) const {
    if (v < m()) return "x" + std::to_string(v + 1);
    return "y" + std::to_string(v - m() + 1);
  }
};

}  // namespace glc
