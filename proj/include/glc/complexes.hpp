#pragma once

#include "glc/resolutions.hpp"

namespace glc {

// Cochain complex of free modules; maps[t] : terms[t] -> terms[t+1] and
// terms[t] sits in cohomological spot lo + t. Over a quotient ring the
// differentials square to zero modulo J.
struct Complex {
  int lo = 0;
  std::vector<FreeModule> terms;
  std::vector<ModuleMap> maps;  // size = terms.size() - 1 (empty complex: both empty)

  std::size_t size() const { return terms.size(); }
  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool in_range(int spot) const { return spot >= lo && spot <= hi(); }

  const FreeModule& term(int spot) const;
  const ModuleMap& map_at(int spot) const;  // terms[spot] -> terms[spot+1]
};

void validate_complex(const QuotientContext& ctx, const Complex& c);

Complex twist_complex(const Complex& c, const Multidegree& delta);

// A chain resolution read as a cochain complex: F_a sits at spot -a, so the
// augmentation end is at spot 0.
Complex resolution_as_complex(const Resolution& res);

// Total Hom complex of two free resolutions: spot i collects Hom(F_a, G_b)
// with a - b = i, blocks ordered by a ascending, generator (k, l) of a block
// at index k * rank(G_b) + l. H^i of the result is Ext^i(M, N) in the range
// unpolluted by the truncations of F and G.
Complex homgr(const QuotientContext& ctx, const Resolution& f, const Resolution& g);

// The same construction against a single fixed module placed in chain degree
// zero (no resolution of the second argument).
Complex hom_into_free(const QuotientContext& ctx, const Resolution& f, const FreeModule& target);

// Replace a complex of S-free modules by a quasi-isomorphic complex of R-free
// modules, using a finite R-free resolution of S. Works top spot down, gluing
// the twisted resolution of each term by a mapping cone. Returns `a` itself
// when the quotient is trivial.
Complex r_free_replacement(const QuotientContext& ctx, const Complex& a,
                           const Resolution& s_over_r);

}  // namespace glc
