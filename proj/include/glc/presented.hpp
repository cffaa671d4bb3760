#pragma once

#include "glc/groebner.hpp"

#include <utility>

namespace glc {

// Quotient of a free module by a relation submodule, with graded pieces
// spanned by standard monomials (monomial generators outside the lead term
// module of the relations and of J).
struct PresentedModule {
  FreeModule f0;
  GroebnerBasis gb;
};

PresentedModule present(const QuotientContext& ctx, FreeModule f0,
                        const std::vector<ModuleElement>& rels);

// Basis of the graded piece in degree gamma: pairs (component, exponent),
// component-major, exponents sorted. Requires a positively graded ring.
std::vector<std::pair<std::size_t, Exponents>> piece_basis(const QuotientContext& ctx,
                                                           const PresentedModule& pm,
                                                           const Multidegree& gamma);

// Coordinates of the class of v relative to a basis from piece_basis.
std::vector<Scalar> piece_coords(const QuotientContext& ctx, const PresentedModule& pm,
                                 const std::vector<std::pair<std::size_t, Exponents>>& basis,
                                 const ModuleElement& v);

}  // namespace glc
