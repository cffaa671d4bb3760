#pragma once

#include "glc/free_module.hpp"

#include <vector>

namespace glc {

// Term order on free modules: position-over-term with LOWER component larger,
// grevlex within a component. Returns +1 if a > b.
inline int cmp_module_term(const ModuleTerm& a, const ModuleTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return cmp_grevlex(a.mono, b.mono);
}

// Working data for a quotient ring S = R/J. J_gb is a reduced, monic Groebner
// basis of J; with empty J the context is the polynomial ring itself.
struct QuotientContext {
  RingSpec ring;
  std::vector<Polynomial> J_gens;
  std::vector<Polynomial> J_gb;

  bool trivial_quotient() const { return J_gb.empty(); }

  static QuotientContext make(RingSpec ring, std::vector<Polynomial> J);
};

Polynomial nf_poly(const QuotientContext& ctx, const Polynomial& p);

struct GBElement {
  ModuleElement elt;  // monic, fully reduced
  ModuleTerm lt;
  Multidegree degree;
};

struct GroebnerBasis {
  std::size_t tgt_rank = 0;
  std::vector<GBElement> elems;

  std::size_t size() const { return elems.size(); }
};

struct Division {
  std::vector<Polynomial> quot;  // coefficients on the basis elements
  ModuleElement rem;
};

// Full normal form of v modulo the basis and J (J reducers take precedence).
Division divide(const QuotientContext& ctx, const GroebnerBasis& gb, ModuleElement v,
                bool with_trace);

ModuleElement nf_mod(const QuotientContext& ctx, const GroebnerBasis& gb, ModuleElement v);

struct GBResult {
  GroebnerBasis gb;
  // gb element k equals sum_j expr[k][j] * gens[j] modulo J
  std::vector<ModuleElement> expr;
  // generators of the syzygy module of gb.elems over S, as elements of
  // S^{gb.size()}; filled only when requested
  std::vector<ModuleElement> syzygies;
};

// Buchberger over S = R/J for a submodule of the free module with the given
// generator degrees. Throws DegreeMismatch on inhomogeneous input.
GBResult module_groebner(const QuotientContext& ctx, const std::vector<Multidegree>& tgt_shifts,
                         const std::vector<ModuleElement>& gens, bool with_syzygies);

// Solves map(u) = v modulo J for each requested v; throws NotInSubmodule when
// v is not in the image.
class Lifter {
 public:
  Lifter(const QuotientContext& ctx, ModuleMap map);

  ModuleElement solve(const ModuleElement& v) const;
  bool contains(const ModuleElement& v) const;

 private:
  const QuotientContext* ctx_;
  std::size_t src_rank_;
  GroebnerBasis gb_;
  std::vector<ModuleElement> expr_;
};

}  // namespace glc
