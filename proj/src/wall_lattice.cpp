#include "mukai/wall_lattice.hpp"

#include <Eigen/Geometry>

#include <stdexcept>
#include <vector>

namespace mukai {

namespace {

// x, y with p y - q x = 1 for coprime p, q.
std::pair<Integer, Integer> bezout_complement(const Integer& p, const Integer& q) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) {
    throw std::invalid_argument("saturate: v is not primitive in the wall lattice");
  }
  // p s + q t = 1  =>  x = -t, y = s
  return {Integer(-t), s};
}

}  // namespace

std::pair<MukaiVector, MukaiVector> saturate(const K3Config& cfg, const MukaiVector& v,
                                             const MukaiVector& a) {
  (void)cfg;
  if (!is_primitive(v)) {
    throw std::invalid_argument("saturate: v must be primitive");
  }
  const MukaiVector normal = v.cross(a);
  if (is_zero(normal)) {
    throw std::invalid_argument("saturate: a is proportional to v");
  }
  const Mat3<Integer> u = unimodular_completion(primitive_part(normal));
  const MukaiVector k1 = u.col(1), k2 = u.col(2);
  const auto c = coordinates_in(k1, k2, v);
  const Integer p = (*c)(0).get_num(), q = (*c)(1).get_num();
  const auto [x, y] = bezout_complement(p, q);
  return {v, MukaiVector(k1 * x + k2 * y)};
}

NormalizedRepresentative normalize_representative(const K3Config& cfg, const MukaiVector& v,
                                                  const MukaiVector& a) {
  const auto [vv, u] = saturate(cfg, v, a);
  const Integer v2 = square(cfg, v);
  if (v2 <= 0) {
    throw std::invalid_argument("normalize_representative: v^2 must be positive");
  }
  std::vector<MukaiVector> candidates;
  for (int sign : {1, -1}) {
    const MukaiVector su = u * Integer(sign);
    const Integer m = pairing(cfg, su, v);
    const Integer k = ceil_div(Integer(-m), v2);
    const Integer m_new = m + k * v2;
    if (2 * m_new <= v2) {
      candidates.push_back(su + v * k);
    }
  }
  // The square grows with the pairing: v^2 a^2 = (a, v)^2 + disc.
  const MukaiVector* best = nullptr;
  for (const auto& cand : candidates) {
    if (best == nullptr) {
      best = &cand;
      continue;
    }
    const Integer mc = pairing(cfg, cand, v), mb = pairing(cfg, *best, v);
    if (mc < mb || (mc == mb && lex_less(*best, cand))) {
      best = &cand;
    }
  }
  NormalizedRepresentative rep;
  rep.a = *best;
  const Integer sq = square(cfg, rep.a);
  rep.standard_form = sq == -2 || sq == 0;
  return rep;
}

WallLattice make_wall_lattice(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a,
                              const NSBasis& basis) {
  const auto rep = normalize_representative(cfg, v, a);
  WallLattice wall;
  wall.v = v;
  wall.a = rep.a;
  wall.standard_form = rep.standard_form;
  wall.gram = gram_of(cfg, v, rep.a);
  wall.isotropic_boundary = wall.gram.discriminant() == 0;
  wall.divisor = wall_divisor(cfg, v, rep.a, basis);
  wall.representative = rep.a;
  if (wall.isotropic_boundary) {
    MukaiVector w = primitive_part(MukaiVector(wall.gram.q11 * rep.a - wall.gram.q12 * v));
    if (lex_less(w, MukaiVector(-w))) {
      w = -w;
    }
    wall.representative = w;
  }
  return wall;
}

}  // namespace mukai
