#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glc/field.hpp"

using namespace glc;

TEST_CASE("arithmetic in F_32003") {
  PrimeField F(32003);
  CHECK(F.characteristic() == 32003);
  CHECK(F.one() == 1);
  CHECK(F.add(32000, 5) == 2);
  CHECK(F.sub(3, 5) == 32001);
  CHECK(F.mul(1000, 1000) == 1000000 % 32003);
  CHECK(F.neg(0) == 0);
  CHECK(F.neg(1) == 32002);
}

TEST_CASE("from_int reduces negatives") {
  PrimeField F(32003);
  CHECK(F.from_int(-1) == 32002);
  CHECK(F.from_int(-32003) == 0);
  CHECK(F.from_int(32003) == 0);
  CHECK(F.from_int(64007) == 1);
}

TEST_CASE("inverses") {
  PrimeField F(32003);
  for (Scalar a : {Scalar(1), Scalar(2), Scalar(7), Scalar(32002), Scalar(12345)}) {
    CHECK(F.mul(a, F.inv(a)) == 1);
  }
  CHECK_THROWS_AS(F.inv(0), DivisionByZero);
}

TEST_CASE("small characteristic") {
  PrimeField F(2);
  CHECK(F.add(1, 1) == 0);
  CHECK(F.inv(1) == 1);
  PrimeField F5(5);
  CHECK(F5.inv(2) == 3);  // 2*3 = 6 = 1 mod 5
  CHECK(F5.from_int(-7) == 3);
}

TEST_CASE("composite characteristic is rejected") {
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(32001), Error);  // 3 * 10667
  CHECK_NOTHROW(PrimeField(32003));
  CHECK_NOTHROW(PrimeField(101));
}
