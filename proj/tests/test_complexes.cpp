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

Polynomial mono(std::initializer_list<int> e, long long c = 1) {
  Exponents v(e);
  PrimeField F(32003);
  return poly_monomial(v, F.from_int(c));
}

Resolution koszul_point(const QuotientContext& ctx) {
  Presentation k{FreeModule::of_rank(1, 2), {{poly_var(2, 0)}, {poly_var(2, 1)}}};
  Resolution res = resolve(ctx, k, 4);
  minimize(ctx, res);
  return res;
}

}  // namespace

TEST_CASE("a resolution reads as a cochain complex") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  Resolution res = koszul_point(ctx);
  Complex c = resolution_as_complex(res);
  CHECK(c.lo == -2);
  CHECK(c.hi() == 0);
  CHECK(c.term(0).rank() == 1);
  CHECK(c.term(-1).rank() == 2);
  CHECK(c.term(-2).rank() == 1);
  // map_at(-1) is d_1 : F_1 -> F_0
  CHECK(c.map_at(-1).cols[0][0] == res.maps[0].cols[0][0]);
  CHECK(c.map_at(-2).cols[0][1] == res.maps[1].cols[0][1]);
  CHECK_NOTHROW(validate_complex(ctx, c));
}

TEST_CASE("twist shifts every term") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  Complex c = resolution_as_complex(koszul_point(ctx));
  Multidegree d({1, 1});
  Complex t = twist_complex(c, d);
  CHECK(t.lo == c.lo);
  for (int s = c.lo; s <= c.hi(); ++s)
    for (std::size_t j = 0; j < c.term(s).rank(); ++j)
      CHECK(t.term(s).shifts[j] == c.term(s).shifts[j] - d);
  CHECK_NOTHROW(validate_complex(ctx, t));
}

TEST_CASE("homgr of two small resolutions") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  Presentation mx{FreeModule::of_rank(1, 2), {{poly_var(2, 0)}}};
  Presentation my{FreeModule::of_rank(1, 2), {{poly_var(2, 1)}}};
  Resolution f = resolve(ctx, mx, 3), g = resolve(ctx, my, 3);
  minimize(ctx, f);
  minimize(ctx, g);
  Complex h = homgr(ctx, f, g);
  CHECK_NOTHROW(validate_complex(ctx, h));
  // spot i gathers Hom(F_a, G_b) with a - b = i
  CHECK(h.lo == -1);
  CHECK(h.hi() == 1);
  REQUIRE(h.term(-1).rank() == 1);
  CHECK(h.term(-1).shifts[0] == Multidegree({0, 1}));
  REQUIRE(h.term(0).rank() == 2);
  CHECK(h.term(0).shifts[0] == Multidegree({0, 0}));
  CHECK(h.term(0).shifts[1] == Multidegree({-1, 1}));
  REQUIRE(h.term(1).rank() == 1);
  CHECK(h.term(1).shifts[0] == Multidegree({-1, 0}));
}

TEST_CASE("homgr computes ext of the residue field") {
  // over k[x]: Ext^0(k, k) = k in degree 0, Ext^1(k, k) = k in degree -1
  GradingData g{{Multidegree({1})}, {}};
  RingSpec R(g, PrimeField(32003));
  QuotientContext ctx = QuotientContext::make(R, {});
  Presentation k{FreeModule::of_rank(1, 1), {{poly_var(1, 0)}}};
  GlcSetup ext = prepare_glc(ctx, k, k, BlockSel::Q, GlcOptions{});
  CHECK(glc_dim(ctx, ext, 0, Multidegree({0})) == 1);
  CHECK(glc_dim(ctx, ext, 0, Multidegree({1})) == 0);
  CHECK(glc_dim(ctx, ext, 0, Multidegree({-1})) == 0);
  CHECK(glc_dim(ctx, ext, 1, Multidegree({-1})) == 1);
  CHECK(glc_dim(ctx, ext, 1, Multidegree({0})) == 0);
  CHECK(glc_dim(ctx, ext, 2, Multidegree({-1})) == 0);
}

TEST_CASE("hom_into_free dualizes a resolution") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  Resolution res = koszul_point(ctx);
  Complex h = hom_into_free(ctx, res, FreeModule::of_rank(1, 2));
  CHECK(h.lo == 0);
  CHECK(h.hi() == 2);
  CHECK(h.term(0).shifts[0] == Multidegree({0, 0}));
  CHECK(h.term(2).shifts[0] == Multidegree({-1, -1}));
  CHECK_NOTHROW(validate_complex(ctx, h));
}

TEST_CASE("r-free replacement of the quotient ring") {
  GradingData g{{Multidegree({1, 0}), Multidegree({1, 0})}, {Multidegree({0, 1})}};
  RingSpec R(g, PrimeField(32003));
  const PrimeField& F = R.field;
  QuotientContext ctx = QuotientContext::make(R, {mono({1, 0, 1})});
  QuotientContext rctx = QuotientContext::make(R, {});

  // S itself, one free term in spot 0
  Complex a;
  a.lo = 0;
  a.terms.push_back(FreeModule::of_rank(1, 2));
  Resolution sres = s_resolution_over_r(ctx);
  Complex repl = r_free_replacement(ctx, a, sres);
  CHECK_NOTHROW(validate_complex(rctx, repl));  // exact over R: d^2 = 0 on the nose

  PresentedModule s_mod = present(ctx, FreeModule::of_rank(1, 2), {});
  for (const auto& gamma : degree_window(2, 2)) {
    CHECK(testing::plain_cohomology_dim(F, g, repl, 0, gamma) ==
          piece_basis(ctx, s_mod, gamma).size());
    for (int u = repl.lo; u < 0; ++u)
      CHECK(testing::plain_cohomology_dim(F, g, repl, u, gamma) == 0);
  }
}

TEST_CASE("r-free replacement of a truncated resolution") {
  GradingData g{{Multidegree({1, 0}), Multidegree({1, 0})}, {Multidegree({0, 1})}};
  RingSpec R(g, PrimeField(32003));
  const PrimeField& F = R.field;
  QuotientContext ctx = QuotientContext::make(R, {mono({1, 0, 1})});
  QuotientContext rctx = QuotientContext::make(R, {});

  // N = S/(x1) has a periodic infinite S-free resolution; truncate and replace
  Presentation n{FreeModule::of_rank(1, 2), {{poly_var(3, 0)}}};
  Resolution res = resolve(ctx, n, 4);
  CHECK(!res.complete);
  minimize(ctx, res);
  Complex cs = resolution_as_complex(res);
  Complex repl = r_free_replacement(ctx, cs, s_resolution_over_r(ctx));
  CHECK_NOTHROW(validate_complex(rctx, repl));

  // the replacement is a quasi-isomorphism: N at spot 0, nothing in the
  // range the truncation leaves intact
  PresentedModule pm = present(ctx, n.f0, n.relations);
  for (const auto& gamma : degree_window(2, 2)) {
    CHECK(testing::plain_cohomology_dim(F, g, repl, 0, gamma) ==
          piece_basis(ctx, pm, gamma).size());
    CHECK(testing::plain_cohomology_dim(F, g, repl, -1, gamma) == 0);
    CHECK(testing::plain_cohomology_dim(F, g, repl, -2, gamma) == 0);
    CHECK(testing::plain_cohomology_dim(F, g, repl, -3, gamma) == 0);
  }
}

TEST_CASE("replacement is the identity over the polynomial ring") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  Complex c = resolution_as_complex(koszul_point(ctx));
  Resolution trivial = s_resolution_over_r(ctx);
  Complex repl = r_free_replacement(ctx, c, trivial);
  CHECK(repl.lo == c.lo);
  CHECK(repl.terms.size() == c.terms.size());
  for (int s = c.lo; s <= c.hi(); ++s) CHECK(repl.term(s).rank() == c.term(s).rank());
}

TEST_CASE("validate_complex catches bad differentials") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  Complex c;
  c.lo = 0;
  c.terms.push_back(FreeModule{{Multidegree({0, 0})}});
  c.terms.push_back(FreeModule{{Multidegree({-1, 0})}});
  c.terms.push_back(FreeModule{{Multidegree({-1, -1})}});
  // x then y: degree-correct but composes to xy, not zero
  c.maps.push_back(ModuleMap{c.terms[0], c.terms[1], {{poly_var(2, 0)}}});
  c.maps.push_back(ModuleMap{c.terms[1], c.terms[2], {{poly_var(2, 1)}}});
  CHECK_THROWS_AS(validate_complex(ctx, c), Error);

  // degree mismatches are caught per entry
  ModuleMap bad{c.terms[0], c.terms[0], {{poly_var(2, 0)}}};
  CHECK_THROWS_AS(bad.validate(R.grading), DegreeMismatch);
}
