#pragma once

#include "glc/groebner.hpp"

#include <map>
#include <optional>

namespace glc {

// M = coker(relations -> f0) over the quotient ring of the context.
struct Presentation {
  FreeModule f0;
  std::vector<ModuleElement> relations;

  static Presentation free_module(FreeModule f) { return Presentation{std::move(f), {}}; }
};

// F_0 <- F_1 <- ... ; maps[i] : terms[i+1] -> terms[i]. `complete` marks that
// the last syzygy computation came back empty, i.e. the resolution ends.
struct Resolution {
  std::vector<FreeModule> terms;
  std::vector<ModuleMap> maps;
  bool complete = false;

  std::size_t length() const { return maps.size(); }
};

// Free resolution over S = R/J by iterated Groebner syzygies. Each map's
// columns form a Groebner basis of its image. Stops after max_len maps.
Resolution resolve(const QuotientContext& ctx, const Presentation& pres, std::size_t max_len);

// Prune trivial summands (unit entries) everywhere. Afterward the resolution
// is minimal wherever it is complete.
void minimize(const QuotientContext& ctx, Resolution& res);

// Largest homological index with a nonzero term; nullopt when the resolution
// is truncated (projective dimension unknown) or when pruning is pending.
std::optional<std::size_t> projective_dimension(const Resolution& res);

// Graded Betti numbers of term i: degree -> multiplicity.
std::map<Multidegree, std::size_t> graded_betti(const Resolution& res, std::size_t i);

// Presentation of the tensor product over S of two presented modules.
Presentation tensor_presentation(const QuotientContext& ctx, const Presentation& a,
                                 const Presentation& b);

// Remove unit pivots from the presentation matrix; detects free modules (a
// minimal presentation of a free module has no relations).
Presentation minimal_presentation(const QuotientContext& ctx, Presentation pres);

}  // namespace glc
