#include "support.hpp"
#include "oracle.hpp"
#include "mukai/chamber.hpp"

#include <doctest.h>

#include <set>

using namespace mukai;
using namespace mukai::test;

TEST_SUITE("walls") {

TEST_CASE("enumeration rejects bad vectors") {
  const K3Config cfg(2);
  CHECK_THROWS_AS(enumerate_walls(cfg, mv(0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_walls(cfg, mv(2, 0, -8)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_walls(cfg, mv(1, 0, 1)), std::invalid_argument);
}

TEST_CASE("walls of v' in order") {
  const K3Config cfg(2);
  const WallEnumeration en = enumerate_walls(cfg, mv(1, 0, -4));
  CHECK(en.stable);
  CHECK(en.lower_closed);
  CHECK(en.upper_closed);
  CHECK(en.warnings.empty());
  CHECK(en.window == 128);
  const std::vector<MukaiVector> expected = {mv(0, 0, 1),   mv(1, -1, 2), mv(1, -1, 1),
                                             mv(-1, 2, -5), mv(2, -3, 5), mv(-1, 2, -4)};
  REQUIRE(en.walls.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    INFO(i);
    CHECK(same_up_to_sign(en.walls[i].lattice.representative, expected[i]));
  }
  // rays turn monotonically
  for (std::size_t i = 0; i + 2 < en.walls.size(); ++i) {
    CHECK(orientation(en.walls[i].ray, en.walls[i + 1].ray) ==
          orientation(en.walls[i + 1].ray, en.walls[i + 2].ray));
  }
  // wall divisors are pairwise non-proportional
  for (std::size_t i = 0; i < en.walls.size(); ++i) {
    for (std::size_t j = i + 1; j < en.walls.size(); ++j) {
      CHECK(orientation(en.walls[i].ray, en.walls[j].ray) != 0);
    }
  }
}

TEST_CASE("a larger window changes nothing for the example vectors") {
  const K3Config cfg(2);
  for (const auto& v : {mv(1, 0, -4), mv(0, 2, -1), mv(1, 0, -1), mv(0, 1, -1), mv(2, 1, -2)}) {
    EnumerationOptions small;
    small.check_stability = false;
    EnumerationOptions big = small;
    big.window = 8 * default_window(cfg, v);
    const auto a = enumerate_walls(cfg, v, small), b = enumerate_walls(cfg, v, big);
    REQUIRE(a.walls.size() == b.walls.size());
    for (std::size_t i = 0; i < a.walls.size(); ++i) {
      CHECK(a.walls[i].lattice.divisor == b.walls[i].lattice.divisor);
    }
  }
}

TEST_CASE("brute-force oracle: no wall meeting Mov is missed") {
  const K3Config cfg(2);
  for (const auto& v : {mv(1, 0, -4), mv(0, 2, -1), mv(1, 0, -1), mv(0, 1, -1)}) {
    INFO(to_string(v));
    const WallEnumeration en = enumerate_walls(cfg, v);
    const auto oracle = brute_force_walls(cfg, v, en.basis, en.reference, 12);
    const auto [lo, hi] = brute_force_mov(oracle, en.reference);
    REQUIRE(lo);
    REQUIRE(hi);
    std::set<std::string> found;
    for (const auto& w : en.walls) found.insert(ray_key(w.ray));
    // the enumerated Mov boundary agrees with the box
    CHECK(ray_key(en.walls.front().ray) == ray_key(orientation(*lo, *hi) > 0 ? *lo : *hi));
    std::size_t inside = 0;
    for (const auto& [key, w] : oracle) {
      const bool in_mov = orientation(*lo, w.ray) >= 0 && orientation(w.ray, *hi) >= 0;
      if (!in_mov) continue;
      ++inside;
      INFO("a=", to_string(w.a));
      CHECK(found.count(key) == 1);
    }
    CHECK(inside == en.walls.size());
  }
}

TEST_CASE("chamber chains") {
  const K3Config cfg(2);
  const ChamberChain vp = chamber_chain(cfg, mv(1, 0, -4));
  CHECK(vp.chambers == 5);
  CHECK(vp.interior_walls == 4);
  REQUIRE(vp.walls.size() == 6);
  CHECK(vp.walls.front().boundary);
  CHECK(vp.walls.back().boundary);
  const std::vector<long> fibers = {3, 2, 2, 4};
  for (std::size_t i = 1; i <= 4; ++i) {
    const auto& e = vp.walls[i];
    CHECK_FALSE(e.boundary);
    CHECK(e.verdict.kind == WallKind::Flopping);
    CHECK_FALSE(e.verdict.totally_semistable);
    REQUIRE(e.bundle);
    CHECK(e.bundle->fiber_dim == fibers[i - 1]);
  }
  const ChamberChain s2 = chamber_chain(cfg, mv(1, 0, -1));
  CHECK(s2.chambers == 2);
  CHECK(s2.interior_walls == 1);
}

TEST_CASE("T* transports the chain of (0,2,-1) onto that of v'") {
  const K3Config cfg(2);
  const Isometry t = twist_T(cfg);
  const ChamberChain m = chamber_chain(cfg, mv(0, 2, -1));
  const ChamberChain mp = chamber_chain(cfg, t(mv(0, 2, -1)));
  REQUIRE(m.walls.size() == mp.walls.size());
  CHECK(m.chambers == mp.chambers);
  for (std::size_t i = 0; i < m.walls.size(); ++i) {
    const auto& x = m.walls[i];
    const auto& y = mp.walls[i];
    INFO(i);
    CHECK(same_up_to_sign(t(x.wall.lattice.representative), y.wall.lattice.representative));
    CHECK(x.verdict.kind == y.verdict.kind);
    CHECK(x.verdict.totally_semistable == y.verdict.totally_semistable);
    CHECK(x.wall.lattice.divisor.bbf_square == y.wall.lattice.divisor.bbf_square);
    CHECK(x.curve.divisibility == y.curve.divisibility);
    CHECK(x.curve.bbf_square == y.curve.bbf_square);
    CHECK(x.boundary == y.boundary);
    CHECK(x.bundle.has_value() == y.bundle.has_value());
    if (x.bundle && y.bundle) CHECK(x.bundle->fiber_dim == y.bundle->fiber_dim);
  }
}

TEST_CASE("other genera and vectors enumerate with closed movable cones") {
  for (long g : {2L, 3L, 4L}) {
    const K3Config cfg(g);
    for (const auto& v : {mv(1, 0, -1), mv(1, 0, -2), mv(1, 0, -3), mv(2, 1, -1), mv(0, 1, -1)}) {
      if (square(cfg, v) <= 0) continue;
      INFO("g=", g, " v=", to_string(v));
      const ChamberChain chain = chamber_chain(cfg, v);
      CHECK(chain.enumeration.stable);
      CHECK(chain.chambers == chain.interior_walls + 1);
      for (const auto& e : chain.walls) {
        CHECK(pairing(cfg, chain.enumeration.basis.vector_of(e.wall.lattice.divisor.coords), v) == 0);
        CHECK(e.curve.bbf_square ==
              ratio(e.wall.lattice.divisor.bbf_square, Integer(e.curve.divisibility * e.curve.divisibility)));
      }
    }
  }
}

}
