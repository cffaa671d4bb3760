#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glc/duality.hpp"
#include "support/cech_oracle.hpp"

using namespace glc;

namespace {

RingSpec bigraded2() {
  GradingData g{{Multidegree({1, 0})}, {Multidegree({0, 1})}};
  return RingSpec(g, PrimeField(32003));
}

RingSpec bigraded4() {
  GradingData g{{Multidegree({1, 0}), Multidegree({1, 0})},
                {Multidegree({0, 1}), Multidegree({0, 1})}};
  return RingSpec(g, PrimeField(32003));
}

Polynomial mono(std::initializer_list<int> e, long long c = 1) {
  Exponents v(e);
  PrimeField F(32003);
  return poly_monomial(v, F.from_int(c));
}

}  // namespace

TEST_CASE("block bookkeeping") {
  GradingData g = bigraded2().grading;
  CHECK(block_size(g, BlockSel::P) == 1);
  CHECK(block_size(g, BlockSel::Q) == 1);
  CHECK(block_region(g, BlockSel::P) == p_negative_region(g));
  CHECK(block_region(g, BlockSel::Q) == q_negative_region(g));

  GradingData only_x{{Multidegree({1})}, {}};
  CHECK(block_size(only_x, BlockSel::Q) == 0);
  CHECK(block_region(only_x, BlockSel::Q) == nonnegative_region(only_x));
}

TEST_CASE("top functor on a single free module") {
  RingSpec R = bigraded2();
  GradingData g = R.grading;
  Complex c;
  c.lo = 0;
  c.terms.push_back(FreeModule::of_rank(1, 2));
  LocalizedComplex lc = apply_top_functor(g, c, BlockSel::P);
  CHECK(lc.lo == 1);
  CHECK(lc.hi() == 1);
  REQUIRE(lc.terms[0].size() == 1);
  CHECK(lc.terms[0][0].region == p_negative_region(g));

  // H^1_p(R) has basis x^a y^b with a <= -1, b >= 0
  auto basis = localized_piece_basis(g, lc.terms[0], Multidegree({-1, 2}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].first == 0);
  CHECK(basis[0].second == Exponents({-1, 2}));
  CHECK(localized_piece_basis(g, lc.terms[0], Multidegree({0, 2})).empty());
  CHECK(localized_cohomology_dim(R.field, g, lc, 1, Multidegree({-2, 0})) == 1);
  CHECK(localized_cohomology_dim(R.field, g, lc, 0, Multidegree({-2, 0})) == 0);
  CHECK(localized_cohomology_dim(R.field, g, lc, 2, Multidegree({-2, 0})) == 0);
}

TEST_CASE("local cohomology of the coordinate cross") {
  // N = R/(xy) over the bigraded plane: H^0_p(N) is the y-axis part in
  // degrees (0, b >= 1), H^1_p(N) lives in degrees (a <= -1, 0)
  RingSpec R = bigraded2();
  GradingData g = R.grading;
  QuotientContext ctx = QuotientContext::make(R, {});
  Presentation free1 = Presentation::free_module(FreeModule::of_rank(1, 2));
  Presentation n{FreeModule::of_rank(1, 2), {{mono({1, 1})}}};
  GlcSetup lc = prepare_glc(ctx, free1, n, BlockSel::P, GlcOptions{});
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b) {
      Multidegree gamma({a, b});
      std::size_t h0 = (a == 0 && b >= 1) ? 1 : 0;
      std::size_t h1 = (a <= -1 && b == 0) ? 1 : 0;
      CHECK(glc_dim(ctx, lc, 0, gamma) == h0);
      CHECK(glc_dim(ctx, lc, 1, gamma) == h1);
      CHECK(glc_dim(ctx, lc, 2, gamma) == 0);
    }
}

TEST_CASE("generalized route agrees with the cech oracle") {
  RingSpec R = bigraded2();
  GradingData g = R.grading;
  const PrimeField& F = R.field;
  QuotientContext ctx = QuotientContext::make(R, {});
  Presentation free1 = Presentation::free_module(FreeModule::of_rank(1, 2));

  std::vector<Presentation> candidates = {
      Presentation{FreeModule::of_rank(1, 2), {{mono({1, 1})}}},
      Presentation{FreeModule::of_rank(1, 2), {{mono({2, 0})}}},
      // a non-minimal rank-2 presentation of R/(x^2)
      Presentation{FreeModule{{Multidegree({0, 0}), Multidegree({0, 1})}},
                   {{mono({0, 1}), mono({0, 0}, -1)}, {mono({2, 0}), Polynomial{}}}},
  };
  for (const auto& n : candidates) {
    Resolution res = resolve(ctx, n, 4);
    minimize(ctx, res);
    Complex cs = resolution_as_complex(res);
    for (BlockSel block : {BlockSel::P, BlockSel::Q}) {
      GlcSetup setup = prepare_glc(ctx, free1, n, block, GlcOptions{});
      for (int i = 0; i <= 2; ++i)
        for (const auto& gamma : degree_window(2, 2)) {
          std::size_t lhs = glc_dim(ctx, setup, static_cast<std::size_t>(i), gamma);
          std::size_t rhs = testing::cech_cohomology_dim(F, g, cs, block, i, gamma);
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("local cohomology of a hypersurface in four variables") {
  // N = R/(x1 y1) over bigraded k[x1,x2,y1,y2]; frozen formulas:
  //   dim H^1_p(N)_(g1,g2) = g2        for g1 <= -1, g2 >= 1
  //   dim H^2_p(N)_(g1,g2) = -g1 - 1   for g1 <= -2, g2 >= 0
  RingSpec R = bigraded4();
  QuotientContext ctx = QuotientContext::make(R, {});
  Presentation free1 = Presentation::free_module(FreeModule::of_rank(1, 2));
  Presentation n{FreeModule::of_rank(1, 2), {{mono({1, 0, 1, 0})}}};
  GlcSetup lc = prepare_glc(ctx, free1, n, BlockSel::P, GlcOptions{});
  for (long long g1 = -3; g1 <= 3; ++g1)
    for (long long g2 = -3; g2 <= 3; ++g2) {
      Multidegree gamma({g1, g2});
      std::size_t h1 = (g1 <= -1 && g2 >= 1) ? static_cast<std::size_t>(g2) : 0;
      std::size_t h2 = (g1 <= -2 && g2 >= 0) ? static_cast<std::size_t>(-g1 - 1) : 0;
      CHECK(glc_dim(ctx, lc, 0, gamma) == 0);
      CHECK(glc_dim(ctx, lc, 1, gamma) == h1);
      CHECK(glc_dim(ctx, lc, 2, gamma) == h2);
    }
}

TEST_CASE("ext dimensions against a fixed module") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  PresentedModule r_mod = present(ctx, FreeModule::of_rank(1, 2), {});
  for (int t = 1; t <= 3; ++t) {
    Presentation m{FreeModule::of_rank(1, 2), {{mono({t, 0})}}};
    Resolution res = resolve(ctx, m, 3);
    minimize(ctx, res);
    // Ext^1(R/(x^t), R) = R(t,0)/(x^t); in degree (-1,0) always one line
    CHECK(ext_dim(ctx, res, r_mod, 1, Multidegree({-1, 0})) == 1);
    CHECK(ext_dim(ctx, res, r_mod, 0, Multidegree({0, 0})) == 0);
    CHECK(ext_dim(ctx, res, r_mod, 1, Multidegree({-(long long)t - 1, 0})) == 0);
    CHECK(ext_dim(ctx, res, r_mod, 2, Multidegree({-1, 0})) == 0);
  }
}

TEST_CASE("tor dimensions") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  Presentation m{FreeModule::of_rank(1, 2), {{poly_var(2, 0)}}};
  Resolution res = resolve(ctx, m, 3);
  minimize(ctx, res);
  PresentedModule n_mod = present(ctx, m.f0, m.relations);
  // Tor_0(R/x, R/x) = R/x, Tor_1(R/x, R/x) = (R/x)(-(1,0))
  CHECK(tor_dim(ctx, res, n_mod, 0, Multidegree({0, 0})) == 1);
  CHECK(tor_dim(ctx, res, n_mod, 0, Multidegree({1, 0})) == 0);
  CHECK(tor_dim(ctx, res, n_mod, 0, Multidegree({0, 2})) == 1);
  CHECK(tor_dim(ctx, res, n_mod, 1, Multidegree({1, 0})) == 1);
  CHECK(tor_dim(ctx, res, n_mod, 1, Multidegree({0, 0})) == 0);
  CHECK(tor_dim(ctx, res, n_mod, 1, Multidegree({1, 1})) == 1);
  CHECK(tor_dim(ctx, res, n_mod, 2, Multidegree({1, 0})) == 0);
}

TEST_CASE("direct limit oracle stabilizes on torsion degrees") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  Presentation free1 = Presentation::free_module(FreeModule::of_rank(1, 2));
  Presentation n{FreeModule::of_rank(1, 2), {{mono({1, 1})}}};
  GlcSetup lc = prepare_glc(ctx, free1, n, BlockSel::P, GlcOptions{});

  for (const Multidegree& gamma :
       {Multidegree({-1, 0}), Multidegree({-2, 0}), Multidegree({0, 1}), Multidegree({0, 0})}) {
    for (std::size_t i = 0; i <= 1; ++i) {
      ExtLimit lim = ext_limit_oracle(ctx, free1, n, BlockSel::P, i, gamma, 5);
      REQUIRE(lim.dims.size() == 5);
      if (lim.stabilized)
        CHECK(lim.dims.back() == glc_dim(ctx, lc, i, gamma));
    }
  }
  // frozen endpoint: H^1_p(R/(xy)) in degree (-1,0) is one-dimensional
  CHECK(ext_limit_value(ctx, free1, n, BlockSel::P, 1, Multidegree({-1, 0}), 5) == 1);
  CHECK(ext_limit_value(ctx, free1, n, BlockSel::P, 0, Multidegree({0, 2}), 5) == 1);
  CHECK(ext_limit_value(ctx, free1, n, BlockSel::P, 0, Multidegree({0, 0}), 5) == 0);
}

TEST_CASE("piece basis and coordinates of a presented module") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  PresentedModule pm = present(ctx, FreeModule::of_rank(1, 2), {{mono({2, 0})}});
  auto b10 = piece_basis(ctx, pm, Multidegree({1, 0}));
  REQUIRE(b10.size() == 1);
  CHECK(b10[0].second == Exponents({1, 0}));
  CHECK(piece_basis(ctx, pm, Multidegree({2, 0})).empty());
  auto b11 = piece_basis(ctx, pm, Multidegree({1, 1}));
  REQUIRE(b11.size() == 1);

  auto coords = piece_coords(ctx, pm, b10, {mono({1, 0}, 7)});
  REQUIRE(coords.size() == 1);
  CHECK(coords[0] == 7);
  // x^2 is a relation, so its class vanishes
  auto zero = piece_coords(ctx, pm, piece_basis(ctx, pm, Multidegree({2, 0})), {mono({2, 0})});
  CHECK(zero.empty());
}

TEST_CASE("cohomology queries outside the complex range are zero") {
  RingSpec R = bigraded2();
  GradingData g = R.grading;
  Complex c;
  c.lo = 0;
  c.terms.push_back(FreeModule::of_rank(1, 2));
  LocalizedComplex lc = apply_top_functor(g, c, BlockSel::P);
  CHECK(localized_cohomology_dim(R.field, g, lc, 5, Multidegree({-1, 0})) == 0);
  CHECK(localized_cohomology_dim(R.field, g, lc, -3, Multidegree({-1, 0})) == 0);
}
