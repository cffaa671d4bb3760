#pragma once

#include <stdexcept>
#include <string>

namespace glc {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero in the coefficient field") {}
};

// A graded piece or exponent region with an unpointed recession cone.
struct NonFiniteRegion : Error {
  explicit NonFiniteRegion(const std::string& w) : Error(w) {}
};

// Matrix entries whose degrees do not match the source/target shifts.
struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& w) : Error(w) {}
};

struct NotInSubmodule : Error {
  explicit NotInSubmodule(const std::string& w) : Error(w) {}
};

struct NotCohenMacaulay : Error {
  explicit NotCohenMacaulay(const std::string& w) : Error(w) {}
};

// Kept for API completeness: complexes are stored bounded, so hom-total-complex
// formation cannot actually receive two unbounded arguments; the guard against
// conceptually unbounded inputs lives upstream (see generalized_local_cohomology).
struct BothUnbounded : Error {
  BothUnbounded() : Error("hom total complex of two unbounded complexes") {}
};

struct HypothesisViolation : Error {
  explicit HypothesisViolation(const std::string& w) : Error(w) {}
};

// Scenario preconditions on block emptiness / module shape.
struct WrongShape : Error {
  explicit WrongShape(const std::string& w) : Error(w) {}
};

struct Unstabilized : Error {
  explicit Unstabilized(const std::string& w) : Error(w) {}
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& w)
      : Error("line " + std::to_string(line_) + ": " + w), line(line_) {}
};

}  // namespace glc
