#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>

#include "doctest.h"
#include "coeffring.hpp"

using namespace skewring;

TEST_CASE("construction validates the modulus") {
  CHECK_NOTHROW(CoeffRing(0));
  CHECK_NOTHROW(CoeffRing(3));
  CHECK_NOTHROW(CoeffRing(4));
  CHECK_THROWS_AS(CoeffRing(1), InputError);
  CHECK_THROWS_AS(CoeffRing(2), InputError);
  CHECK_THROWS_AS(CoeffRing(-4), InputError);
}

TEST_CASE("characteristic and 2-torsion") {
  CHECK(characteristic(CoeffRing(0)) == 0);
  CHECK(characteristic(CoeffRing(8)) == 8);
  CHECK(r2_generators(CoeffRing(0)).empty());
  CHECK(r2_generators(CoeffRing(9)).empty());
  CHECK(r2_generators(CoeffRing(4)) == std::vector<RingElem>{2});
  CHECK(r2_generators(CoeffRing(8)) == std::vector<RingElem>{4});
  CHECK(r2_generators(CoeffRing(6)) == std::vector<RingElem>{3});
}

TEST_CASE("2-torsion generator matches an exhaustive scan") {
  for (std::int64_t m = 3; m <= 64; ++m) {
    CoeffRing r(m);
    std::vector<RingElem> torsion;
    for (RingElem x = 1; x < m; ++x)
      if ((2 * x) % m == 0) torsion.push_back(x);
    auto gens = r2_generators(r);
    if (m % 2 != 0) {
      CHECK(torsion.empty());
      CHECK(gens.empty());
    } else {
      REQUIRE(gens.size() == 1);
      CHECK(torsion == std::vector<RingElem>{gens[0]});
    }
  }
}

TEST_CASE("ring classes") {
  CHECK(ring_class(CoeffRing(0)) == RingClass::R2Zero);
  CHECK(ring_class(CoeffRing(3)) == RingClass::R2Zero);
  CHECK(ring_class(CoeffRing(9)) == RingClass::R2Zero);
  CHECK(ring_class(CoeffRing(4)) == RingClass::Char4);
  CHECK(ring_class(CoeffRing(6)) == RingClass::Other);
  CHECK(ring_class(CoeffRing(8)) == RingClass::Other);
}

TEST_CASE("labels and parsing") {
  CHECK(ring_label(CoeffRing(0)) == "z");
  CHECK(ring_label(CoeffRing(8)) == "z/8");
  CHECK(parse_ring("z") == CoeffRing(0));
  CHECK(parse_ring("z/4") == CoeffRing(4));
  CHECK(parse_ring("Z/12") == CoeffRing(12));
  CHECK_THROWS_AS(parse_ring("z/2"), InputError);
  CHECK_THROWS_AS(parse_ring("q"), InputError);
  CHECK_THROWS_AS(parse_ring("z/"), InputError);
  CHECK_THROWS_AS(parse_ring("z/4x"), InputError);
  CHECK(parse_ring_class("r2zero") == RingClass::R2Zero);
  CHECK(parse_ring_class("char4") == RingClass::Char4);
  CHECK(parse_ring_class("other") == RingClass::Other);
  CHECK_THROWS_AS(parse_ring_class("zero"), InputError);
  CHECK(ring_class_label(RingClass::Char4) == "char4");
}

TEST_CASE("arithmetic over Z/m stays canonical") {
  CoeffRing r(8);
  CHECK(radd(r, 5, 6) == 3);
  CHECK(rneg(r, 3) == 5);
  CHECK(rneg(r, 0) == 0);
  CHECK(rmul(r, 5, 5) == 1);
  for (RingElem a = 0; a < 8; ++a) {
    CHECK(radd(r, a, rneg(r, a)) == 0);
    for (RingElem b = 0; b < 8; ++b) {
      CHECK(radd(r, a, b) == (a + b) % 8);
      CHECK(rmul(r, a, b) == (a * b) % 8);
    }
  }
}

TEST_CASE("arithmetic over Z is exact with overflow detection") {
  CoeffRing z(0);
  CHECK(radd(z, 2, -5) == -3);
  CHECK(rmul(z, -4, 3) == -12);
  const RingElem big = INT64_MAX;
  CHECK_THROWS_AS(radd(z, big, 1), OverflowError);
  CHECK_THROWS_AS(rmul(z, big, 2), OverflowError);
  CHECK_THROWS_AS(rneg(z, INT64_MIN), OverflowError);
}
