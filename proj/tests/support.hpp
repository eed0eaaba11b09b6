#pragma once

#include "mukai/scalar.hpp"
#include "mukai/lattice.hpp"

#include <random>

namespace mukai::test {

inline MukaiVector mv(long r, long c, long s) { return mukai_vector(r, c, s); }

inline Rational q(long n, long d = 1) { return ratio(Integer(n), Integer(d)); }

inline MukaiVector random_vector(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  return mv(dist(rng), dist(rng), dist(rng));
}

// The sign convention of a class relative to v is irrelevant for table comparisons.
inline bool same_up_to_sign(const MukaiVector& x, const MukaiVector& y) {
  return x == y || x == MukaiVector(-y);
}

}  // namespace mukai::test
