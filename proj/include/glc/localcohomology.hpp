#pragma once

#include "glc/complexes.hpp"
#include "glc/linalg.hpp"
#include "glc/presented.hpp"

namespace glc {

// The two variable blocks generating the supports: P = (x_1..x_m),
// Q = (y_1..y_n). A block of size zero is allowed; the top functor for it is
// the identity and the pipeline computes plain Ext.
enum class BlockSel { P, Q };

std::size_t block_size(const GradingData& g, BlockSel b);
Region block_region(const GradingData& g, BlockSel b);

// A complex of "localized" graded modules: every generator carries a shift
// and a region describing which exponents survive. Differentials are
// polynomial matrices acting by multiplication followed by truncation (terms
// whose exponents violate a NegOne coordinate of the target are dropped).
struct LocalizedGen {
  Multidegree shift;
  Region region;
};

struct LocalizedComplex {
  int lo = 0;
  std::vector<std::vector<LocalizedGen>> terms;
  std::vector<ModuleMap> maps;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool in_range(int spot) const { return spot >= lo && spot <= hi(); }
};

// Apply the top local cohomology functor H^{|block|}_block termwise to a
// complex of R-free modules; cohomological spots shift up by |block|.
LocalizedComplex apply_top_functor(const GradingData& g, const Complex& c, BlockSel block);

// Basis of the degree-gamma piece of a localized term.
std::vector<std::pair<std::size_t, Exponents>> localized_piece_basis(
    const GradingData& g, const std::vector<LocalizedGen>& term, const Multidegree& gamma);

// Matrix of the differential leaving `spot` on degree-gamma pieces.
Mat localized_piece_matrix(const PrimeField& F, const GradingData& g, const LocalizedComplex& lc,
                           int spot, const Multidegree& gamma);

// dim H^spot(lc)_gamma.
std::size_t localized_cohomology_dim(const PrimeField& F, const GradingData& g,
                                     const LocalizedComplex& lc, int spot,
                                     const Multidegree& gamma);

// ----- dimension, depth bookkeeping ----------------------------------------

std::size_t krull_dimension(const QuotientContext& ctx);
std::size_t codimension(const QuotientContext& ctx);
bool is_cohen_macaulay(const QuotientContext& ctx);

// Minimized R-free resolution of S = R/J (finite by the syzygy theorem).
Resolution s_resolution_over_r(const QuotientContext& ctx);

enum class PdStatus {
  finite,
  exceeded_bound,
  // reserved: a truncated probe can never certify an infinite projective
  // dimension, so this value is never produced here
  infinite,
};

struct PdProbe {
  PdStatus status = PdStatus::exceeded_bound;
  std::size_t pd = 0;  // meaningful only when status == finite
};

PdProbe probe_pd(const QuotientContext& ctx, const Presentation& pres, std::size_t bound);

// ----- the generalized local cohomology pipeline -----------------------------

struct GlcOptions {
  std::size_t max_resolution = 12;  // probe cap for projective dimension
  std::size_t trunc_extra = 1;      // safety margin added to the truncation bound
};

struct GlcSetup {
  LocalizedComplex lc;
  std::size_t truncation = 0;      // resolution length used
  std::optional<std::size_t> pd_m;  // projective dimension of the first argument, if finite
};

// Prepare H^*_block(M, N) for repeated graded-piece queries. Resolves both
// modules to a truncation bound long enough that every spot in [0, m+n] of
// the answer is unpolluted, Hom's them together, replaces the result by a
// quasi-isomorphic complex of R-free modules and localizes at the block.
GlcSetup prepare_glc(const QuotientContext& ctx, const Presentation& pres_m,
                     const Presentation& pres_n, BlockSel block, const GlcOptions& opt);

// dim H^i_block(M, N)_gamma.
std::size_t glc_dim(const QuotientContext& ctx, const GlcSetup& setup, std::size_t i,
                    const Multidegree& gamma);

// ----- independent oracles ---------------------------------------------------

// dim Ext^i(A, B)_gamma computed from a resolution of A and a presented B,
// without resolving B.
std::size_t ext_dim(const QuotientContext& ctx, const Resolution& fa, const PresentedModule& b,
                    std::size_t i, const Multidegree& gamma);

struct ExtLimit {
  std::vector<std::size_t> dims;  // Ext^i(M/I^t M, N)_gamma for t = 1..t_max
  bool stabilized = false;
};

// Degreewise direct-limit oracle for H^i_block(M, N)_gamma.
ExtLimit ext_limit_oracle(const QuotientContext& ctx, const Presentation& pres_m,
                          const Presentation& pres_n, BlockSel block, std::size_t i,
                          const Multidegree& gamma, std::size_t t_max);

// Stabilized value or throws Unstabilized.
std::size_t ext_limit_value(const QuotientContext& ctx, const Presentation& pres_m,
                            const Presentation& pres_n, BlockSel block, std::size_t i,
                            const Multidegree& gamma, std::size_t t_max);

// dim Tor_i(M, B)_gamma from a resolution of M and a presented B.
std::size_t tor_dim(const QuotientContext& ctx, const Resolution& fm, const PresentedModule& b,
                    std::size_t i, const Multidegree& gamma);

}  // namespace glc
