#include "support.hpp"
#include "mukai/ns_geometry.hpp"

#include <doctest.h>

using namespace mukai;
using namespace mukai::test;

TEST_SUITE("ns") {

TEST_CASE("Hilbert basis for v'") {
  const K3Config cfg(2);
  const NSBasis basis = lambda_basis(cfg, mv(1, 0, -4));
  CHECK(basis.hilbert_type);
  CHECK(basis.e1 == mv(-1, 0, -4));
  CHECK(basis.e2 == mv(0, -1, 0));
  CHECK(square(cfg, basis.e1) == -8);
  CHECK(square(cfg, basis.e2) == 2);
  CHECK(pairing(cfg, basis.e1, basis.e2) == 0);
  CHECK(basis.n == 5);
}

TEST_CASE("generic basis spans v-perp") {
  const K3Config cfg(2);
  for (const MukaiVector& v : {mv(0, 2, -1), mv(2, 1, -1), mv(3, 1, -1), mv(0, 1, -1)}) {
    const NSBasis basis = lambda_basis(cfg, v);
    CHECK(pairing(cfg, basis.e1, v) == 0);
    CHECK(pairing(cfg, basis.e2, v) == 0);
    CHECK(is_primitive(basis.e1));
    CHECK(is_primitive(basis.e2));
    // unimodular inside the kernel: any class of v-perp has integral coordinates
    for (long r = -5; r <= 5; ++r) {
      for (long c = -5; c <= 5; ++c) {
        for (long s = -5; s <= 5; ++s) {
          if (pairing(cfg, mv(r, c, s), v) == 0) {
            REQUIRE_NOTHROW(to_ns(cfg, basis, mv(r, c, s)));
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(lambda_basis(cfg, mv(2, 0, -2)), std::invalid_argument);
}

TEST_CASE("wall divisors, divisibility and curve classes for v'") {
  const K3Config cfg(2);
  const MukaiVector v = mv(1, 0, -4);
  const NSBasis basis = lambda_basis(cfg, v);
  struct Row {
    MukaiVector a;
    std::string d;
    long q_d;
    long div;
    std::string r;
    Rational q_r;
  };
  const std::vector<Row> rows = {
      {mv(0, 0, 1), "-δ", -8, 8, "-δ^∨", q(-1, 8)},
      {mv(1, -1, 2), "4H-3δ", -40, 4, "H-6δ^∨", q(-5, 2)},
      {mv(1, -1, 1), "8H-5δ", -72, 8, "H-5δ^∨", q(-9, 8)},
      {mv(-1, 2, -5), "-16H+9δ", -136, 8, "-2H+9δ^∨", q(-17, 8)},
      {mv(2, -3, 5), "24H-13δ", -200, 8, "3H-13δ^∨", q(-25, 8)},
      {mv(-1, 2, -4), "-2H+δ", 0, 2, "-H+4δ^∨", q(0)},
  };
  for (const auto& row : rows) {
    INFO(to_string(row.a));
    NSClass d = wall_divisor(cfg, v, row.a, basis);
    // the sign of D is a convention; compare after matching the table's sign
    if (format_divisor(basis, d) != row.d) d.coords = -d.coords;
    CHECK(format_divisor(basis, d) == row.d);
    CHECK(d.bbf_square == row.q_d);
    CHECK(pairing(cfg, basis.vector_of(d.coords), v) == 0);
    const CurveClass r = curve_class(cfg, v, basis, d);
    CHECK(r.divisibility == row.div);
    CHECK(format_curve(basis, r) == row.r);
    CHECK(r.bbf_square == row.q_r);
    CHECK(r.bbf_square == ratio(d.bbf_square, Integer(r.divisibility * r.divisibility)));
  }
}

TEST_CASE("q(R) = q(D) / div^2 on random walls") {
  std::mt19937_64 rng(31);
  for (long g : {2L, 3L, 5L}) {
    const K3Config cfg(g);
    for (const MukaiVector& v : {mv(1, 0, -4), mv(0, 2, -1), mv(2, 1, -1), mv(1, 0, -2)}) {
      if (square(cfg, v) <= 0) continue;
      const NSBasis basis = lambda_basis(cfg, v);
      for (int i = 0; i < 60; ++i) {
        const MukaiVector a = random_vector(rng, 9);
        if (is_zero(a) || proportional(a, v)) continue;
        const NSClass d = wall_divisor(cfg, v, a, basis);
        const CurveClass r = curve_class(cfg, v, basis, d);
        REQUIRE(r.divisibility > 0);
        REQUIRE(r.bbf_square == ratio(d.bbf_square, Integer(r.divisibility * r.divisibility)));
        REQUIRE(pairing(cfg, basis.vector_of(d.coords), v) == 0);
        REQUIRE(square(cfg, basis.vector_of(d.coords)) == d.bbf_square);
      }
    }
  }
}

}
