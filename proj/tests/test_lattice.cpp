#include "support.hpp"

#include <doctest.h>

using namespace mukai;
using namespace mukai::test;

TEST_SUITE("lattice") {

TEST_CASE("pairing oracle, genus 2") {
  const K3Config cfg(2);
  CHECK(cfg.h2() == 2);
  CHECK(square(cfg, mv(1, 0, -4)) == 8);
  CHECK(square(cfg, mv(0, 2, -1)) == 8);
  CHECK(square(cfg, mv(1, 0, -1)) == 2);
  CHECK(pairing(cfg, mv(1, -1, 2), mv(1, 0, -4)) == 2);
  CHECK(pairing(cfg, mv(0, 0, 1), mv(1, 0, -4)) == -1);
  CHECK(square(cfg, mv(1, -2, 5)) == -2);
  CHECK(moduli_dim(cfg, mv(1, 0, -4)) == 10);
  CHECK(hilbert_n(cfg, mv(1, 0, -4)) == 5);
}

TEST_CASE("genus below 2 is rejected") {
  CHECK_THROWS_AS(K3Config(1), std::invalid_argument);
}

TEST_CASE("gram matrix matches the pairing") {
  const K3Config cfg(5);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const MukaiVector x = random_vector(rng, 20), y = random_vector(rng, 20);
    CHECK(Integer(x.transpose() * gram<Integer>(cfg) * y) == pairing(cfg, x, y));
  }
}

TEST_CASE("T* oracle") {
  const K3Config cfg(2);
  const Isometry t = twist_T(cfg);
  IsometryMatrix expected;
  expected << 0, 0, -1, 0, 1, 2, -1, -4, -4;
  CHECK(t.matrix == expected);
  CHECK(t(mv(0, 2, -1)) == mv(1, 0, -4));
  IsometryMatrix tensor;
  tensor << 1, 0, 0, -2, 1, 0, 4, -4, 1;
  CHECK(Isometry::tensor(cfg, Integer(-2)).matrix == tensor);
  CHECK(line_bundle(cfg, Integer(-2)) == mv(1, -2, 5));
}

TEST_CASE("tensor by zero is the identity") {
  const K3Config cfg(3);
  CHECK(Isometry::tensor(cfg, Integer(0)) == Isometry::identity());
  CHECK(tensor_by(cfg, Integer(0), mv(3, -1, 7)) == mv(3, -1, 7));
}

TEST_CASE("reflection needs a spherical class") {
  const K3Config cfg(2);
  CHECK_THROWS_AS(reflect_spherical(cfg, mv(1, 0, 0), mv(1, 0, -4)), std::invalid_argument);
  CHECK_THROWS_AS(Isometry::reflect(cfg, mv(1, 0, -1)), std::invalid_argument);
}

TEST_CASE("isometries preserve the pairing on random vectors") {
  std::mt19937_64 rng(20241016);
  for (long g : {2L, 3L, 7L}) {
    const K3Config cfg(g);
    const std::vector<Isometry> maps = {
        twist_T(cfg), Isometry::tensor(cfg, Integer(3)), Isometry::dual(),
        Isometry::reflect(cfg, line_bundle(cfg, Integer(1))),
        Isometry::compose({twist_T(cfg), Isometry::dual(), Isometry::tensor(cfg, Integer(-5))})};
    for (int i = 0; i < 1000; ++i) {
      const MukaiVector x = random_vector(rng, 1000), y = random_vector(rng, 1000);
      for (const auto& phi : maps) {
        REQUIRE(pairing(cfg, phi(x), phi(y)) == pairing(cfg, x, y));
      }
    }
  }
}

TEST_CASE("reflections and duals are involutions, tensors invert") {
  std::mt19937_64 rng(7);
  const K3Config cfg(4);
  for (int i = 0; i < 300; ++i) {
    const MukaiVector x = random_vector(rng, 50);
    for (long k = -3; k <= 3; ++k) {
      const MukaiVector w = line_bundle(cfg, Integer(k));
      REQUIRE(reflect_spherical(cfg, w, reflect_spherical(cfg, w, x)) == x);
      REQUIRE(tensor_by(cfg, Integer(-k), tensor_by(cfg, Integer(k), x)) == x);
    }
    REQUIRE(dual(dual(x)) == x);
  }
}

TEST_CASE("composite isometries: order, inverse, determinant") {
  const K3Config cfg(2);
  const Isometry a = Isometry::tensor(cfg, Integer(-2));
  const Isometry r = Isometry::reflect(cfg, mv(1, -2, 5));
  const Isometry both = Isometry::compose({a, r});
  CHECK(both == twist_T(cfg));
  const MukaiVector x = mv(3, -1, 4);
  CHECK(both(x) == r(a(x)));
  CHECK(both.inverse()(both(x)) == x);
  CHECK(abs(both.determinant()) == 1);
  CHECK(unimodular_inverse(both.matrix) * both.matrix == IsometryMatrix::Identity());
  IsometryMatrix singular = IsometryMatrix::Identity();
  singular(2, 2) = 2;
  CHECK_THROWS_AS(unimodular_inverse(singular), std::domain_error);
}

TEST_CASE("primitive parts, parsing and formatting") {
  CHECK(is_primitive(mv(0, 2, -1)));
  CHECK_FALSE(is_primitive(mv(2, 4, -6)));
  CHECK(content(mv(2, 4, -6)) == 2);
  CHECK(primitive_part(mv(2, 4, -6)) == mv(1, 2, -3));
  CHECK(proportional(mv(1, -1, 2), mv(-3, 3, -6)));
  CHECK_FALSE(proportional(mv(1, -1, 2), mv(1, -1, 3)));
  CHECK(parse_vector("1,0,-4") == mv(1, 0, -4));
  CHECK(parse_vector(" -1, 2 ,-5") == mv(-1, 2, -5));
  CHECK(parse_vector("(1,-1,2)") == mv(1, -1, 2));
  CHECK_THROWS_AS(parse_vector("(1,-1,2"), std::invalid_argument);
  CHECK(to_string(mv(-1, 2, -5)) == "(-1,2,-5)");
  CHECK_THROWS_AS(parse_vector("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector("1,x,2"), std::invalid_argument);
}

TEST_CASE("sign normalization flips classes pairing negatively") {
  const K3Config cfg(2);
  CHECK(sign_normalized(cfg, mv(1, 0, -4), mv(0, 0, 1)) == mv(0, 0, -1));
  CHECK(sign_normalized(cfg, mv(1, 0, -4), mv(1, -1, 2)) == mv(1, -1, 2));
}

TEST_CASE("exact scalar helpers") {
  CHECK(exact_sqrt(Integer(49)) == Integer(7));
  CHECK_FALSE(exact_sqrt(Integer(50)).has_value());
  CHECK(exact_sqrt(Rational(4, 9)) == Rational(2, 3));
  CHECK_FALSE(exact_sqrt(Rational(2, 3)).has_value());
  CHECK(floor_div(Integer(-7), Integer(2)) == -4);
  CHECK(ceil_div(Integer(-7), Integer(2)) == -3);
  CHECK(floor_of(Rational(-1, 3)) == -1);
  CHECK(ceil_of(Rational(5, 3)) == 2);
  CHECK(parse_rational("-5/2") == Rational(-5, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(to_string(Rational(6, -4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

}
