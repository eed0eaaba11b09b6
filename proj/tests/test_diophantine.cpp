#include "support.hpp"
#include "mukai/diophantine.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace mukai;
using namespace mukai::test;

TEST_SUITE("diophantine") {

TEST_CASE("unimodular completion clears a row vector") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const MukaiVector f = random_vector(rng, 40);
    if (is_zero(f)) continue;
    const Mat3<Integer> u = unimodular_completion(f);
    REQUIRE(abs(determinant(u)) == 1);
    const Vec3<Integer> image = u.transpose() * f;
    REQUIRE(image(0) == content(f));
    REQUIRE(image(1) == 0);
    REQUIRE(image(2) == 0);
  }
}

TEST_CASE("coordinates in a rank-2 span") {
  const MukaiVector e1 = mv(-1, 0, -4), e2 = mv(0, -1, 0);
  const auto c = coordinates_in(e1, e2, mv(-3, -4, -12));
  REQUIRE(c);
  CHECK((*c)(0) == 3);
  CHECK((*c)(1) == 4);
  CHECK_FALSE(coordinates_in(e1, e2, mv(1, 0, 0)).has_value());
}

TEST_CASE("square-with-pairing oracle for v'") {
  const K3Config cfg(2);
  const MukaiVector v = mv(1, 0, -4);
  const auto sph = solve_square_with_pairing(cfg, v, Integer(-2), Integer(2), Integer(128));
  CHECK(std::find(sph.classes.begin(), sph.classes.end(), mv(1, -1, 2)) != sph.classes.end());
  const auto hc = solve_square_with_pairing(cfg, v, Integer(0), Integer(1), Integer(128));
  CHECK(std::find(hc.classes.begin(), hc.classes.end(), mv(0, 0, -1)) != hc.classes.end());
  for (const auto& a : sph.classes) {
    REQUIRE(square(cfg, a) == -2);
    REQUIRE(pairing(cfg, a, v) == 2);
  }
  CHECK_THROWS_AS(solve_square_with_pairing(cfg, v, Integer(-1), Integer(0), Integer(8)),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_square_with_pairing(cfg, v, Integer(0), Integer(5), Integer(8)),
                  std::invalid_argument);
}

TEST_CASE("square-with-pairing finds every small solution") {
  for (long g : {2L, 3L}) {
    const K3Config cfg(g);
    for (const MukaiVector& v : {mv(1, 0, -4), mv(0, 2, -1), mv(2, 1, -1), mv(1, 0, -1)}) {
      const Integer v2 = square(cfg, v);
      for (long d : {-2L, 0L, 2L}) {
        for (Integer m = 0; 2 * m <= v2; ++m) {
          const auto found = solve_square_with_pairing(cfg, v, Integer(d), m, Integer(400)).classes;
          const std::set<std::string> keys = [&] {
            std::set<std::string> k;
            for (const auto& a : found) k.insert(to_string(a));
            return k;
          }();
          for (long r = -6; r <= 6; ++r) {
            for (long c = -6; c <= 6; ++c) {
              for (long s = -6; s <= 6; ++s) {
                const MukaiVector a = mv(r, c, s);
                if (square(cfg, a) == d && pairing(cfg, a, v) == m) {
                  INFO("g=", g, " v=", to_string(v), " a=", to_string(a));
                  REQUIRE(keys.count(to_string(a)) == 1);
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("classes_in_rank2 agrees with brute force") {
  const std::vector<GramForm2> forms = {{Integer(8), Integer(2), Integer(-2)},
                                        {Integer(8), Integer(3), Integer(0)},
                                        {Integer(8), Integer(1), Integer(-2)},
                                        {Integer(2), Integer(1), Integer(-2)},
                                        {Integer(8), Integer(4), Integer(2)},
                                        {Integer(12), Integer(5), Integer(-4)}};
  for (const auto& f : forms) {
    for (long d = -4; d <= 4; d += 2) {
      for (long m = -6; m <= 6; ++m) {
        auto got = classes_in_rank2(f, Integer(d), Integer(m));
        std::sort(got.begin(), got.end());
        std::vector<LatticePoint2> want;
        for (long p = -50; p <= 50; ++p) {
          for (long qq = -50; qq <= 50; ++qq) {
            if ((p || qq) && f.value(Integer(p), Integer(qq)) == d &&
                f.bilinear(Integer(p), Integer(qq), Integer(1), Integer(0)) == m) {
              want.emplace_back(Integer(p), Integer(qq));
            }
          }
        }
        if (f.discriminant() == 0) {
          // degenerate: only the primitive generators are reported
          for (const auto& pt : got) {
            REQUIRE(std::find(want.begin(), want.end(), pt) != want.end());
          }
          continue;
        }
        INFO("form ", to_string(f.q11), " ", to_string(f.q12), " ", to_string(f.q22), " d=", d, " m=", m);
        REQUIRE(got == want);
      }
    }
  }
}

TEST_CASE("parallelogram points agree with brute force") {
  const GramForm2 f{Integer(8), Integer(2), Integer(-2)};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int i = 0; i < 200; ++i) {
    const LatticePoint2 a{Integer(dist(rng)), Integer(dist(rng))};
    const LatticePoint2 v{Integer(dist(rng)), Integer(dist(rng))};
    const Integer det = a.first * v.second - a.second * v.first;
    if (det == 0) continue;
    auto got = lattice_points_in_parallelogram(f, a, v);
    std::sort(got.begin(), got.end());
    std::vector<LatticePoint2> want;
    for (long x = -13; x <= 13; ++x) {
      for (long y = -13; y <= 13; ++y) {
        // x = lambda a + mu (v - a), 0 <= lambda, mu <= 1
        const Integer px(x), py(y);
        const Rational lam_mu_det = ratio(px * (v.second - a.second) - py * (v.first - a.first), det);
        const Rational mu = ratio(a.first * py - a.second * px, det);
        const Rational lam = lam_mu_det;
        if (lam < 0 || lam > 1 || mu < 0 || mu > 1) continue;
        const bool vertex = (x == 0 && y == 0) || (px == a.first && py == a.second) ||
                            (px == v.first && py == v.second) ||
                            (px == v.first - a.first && py == v.second - a.second);
        if (!vertex) want.emplace_back(px, py);
      }
    }
    REQUIRE(got == want);
  }
}

TEST_CASE("decomposition solutions satisfy their constraints") {
  const K3Config cfg(2);
  const MukaiVector v = mv(1, 0, -4);
  const auto sols = decomposition_solutions(cfg, v, mv(1, -1, 1));
  REQUIRE_FALSE(sols.empty());
  for (const auto& s : sols) {
    REQUIRE(s.a + s.b == v);
    REQUIRE(s.a == MukaiVector(s.x * mv(1, -1, 1) + s.y * v));
    REQUIRE(s.a_pairing > 0);
    REQUIRE(2 * s.a_pairing <= 8);
    REQUIRE((s.spherical ? s.a_square == -2 : s.a_square >= 0));
  }
}

}
