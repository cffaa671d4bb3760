#pragma once

#include "glc/monomial.hpp"
#include "glc/ring.hpp"

#include <optional>
#include <vector>

namespace glc {

struct Term {
  Exponents mono;
  Scalar coeff = 0;
};

// Terms kept sorted descending in the monomial order, coefficients nonzero.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial from_terms(std::vector<Term> ts, const PrimeField& F);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const;
  std::size_t size() const { return terms_.size(); }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  std::vector<Term> terms_;
};

Polynomial poly_zero();
Polynomial poly_const(std::size_t nvars, Scalar c);
Polynomial poly_monomial(Exponents e, Scalar c);
Polynomial poly_var(std::size_t nvars, std::size_t v);

Polynomial poly_add(const PrimeField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const PrimeField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const PrimeField& F, const Polynomial& a);
Polynomial poly_scale(const PrimeField& F, Scalar c, const Polynomial& a);
Polynomial poly_term_mul(const PrimeField& F, const Exponents& e, Scalar c, const Polynomial& a);
Polynomial poly_mul(const PrimeField& F, const Polynomial& a, const Polynomial& b);

// Degree of a homogeneous polynomial; nullopt for 0 or inhomogeneous input.
std::optional<Multidegree> poly_degree(const GradingData& g, const Polynomial& a);
bool poly_homogeneous(const GradingData& g, const Polynomial& a);

std::string poly_str(const RingSpec& ring, const Polynomial& a);

// ----- free module elements -------------------------------------------------
// An element of R^rank, stored densely; POT order with lower component larger.

using ModuleElement = std::vector<Polynomial>;

struct ModuleTerm {
  std::size_t comp = 0;
  Exponents mono;
  Scalar coeff = 0;
};

ModuleElement mod_zero(std::size_t rank);
bool mod_is_zero(const ModuleElement& e);
ModuleTerm mod_lead(const ModuleElement& e);  // throws WrongShape on zero
ModuleElement mod_add(const PrimeField& F, const ModuleElement& a, const ModuleElement& b);
ModuleElement mod_sub(const PrimeField& F, const ModuleElement& a, const ModuleElement& b);
ModuleElement mod_scale(const PrimeField& F, Scalar c, const ModuleElement& a);
ModuleElement mod_term_mul(const PrimeField& F, const Exponents& e, Scalar c,
                           const ModuleElement& a);

// Degree of a homogeneous element of a free module with generator degrees
// `shifts` (the module is the direct sum of R(-shifts[i])).
std::optional<Multidegree> mod_degree(const GradingData& g,
                                      const std::vector<Multidegree>& shifts,
                                      const ModuleElement& e);

std::string mod_str(const RingSpec& ring, const ModuleElement& e);

}  // namespace glc
