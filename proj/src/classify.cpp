#include "mukai/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mukai {

std::string to_string(WallKind kind) {
  switch (kind) {
    case WallKind::Divisorial: return "divisorial";
    case WallKind::Flopping: return "flopping";
    case WallKind::Fake: return "fake";
    case WallKind::LagrangianBoundary: return "lagrangian";
  }
  return "?";
}

std::string to_string(DivisorialType type) {
  switch (type) {
    case DivisorialType::BrillNoether: return "brill-noether";
    case DivisorialType::HilbertChow: return "hilbert-chow";
    case DivisorialType::LiGiesekerUhlenbeck: return "li-gieseker-uhlenbeck";
  }
  return "?";
}

std::string to_string(FlopTrigger trigger) {
  return trigger == FlopTrigger::Spherical ? "spherical" : "positive-sum";
}

std::string to_string(CertificateRole role) {
  switch (role) {
    case CertificateRole::SphericalOrthogonal: return "spherical, (s,v)=0";
    case CertificateRole::IsotropicPairingOne: return "isotropic, (w,v)=1";
    case CertificateRole::IsotropicPairingTwo: return "isotropic, (w,v)=2";
    case CertificateRole::SphericalFlop: return "spherical, 0<(s,v)<=v^2/2";
    case CertificateRole::PositivePart: return "positive part";
    case CertificateRole::EffectiveNegative: return "effective spherical, (s,v)<0";
    case CertificateRole::IsotropicOrthogonal: return "isotropic, (w,v)=0";
  }
  return "?";
}

namespace {

std::optional<AlignmentFunctional> functional_at(const K3Config& cfg, const WallLattice& wall,
                                                 const Rational& b, const Rational& t2) {
  if (t2 <= 0 || !in_geometric_region(cfg, b, t2) || hole_at(cfg, b, t2)) {
    return std::nullopt;
  }
  const GeomCharge zv = central_charge(cfg, wall.v, b, t2);
  if (zv.re == 0 && zv.mu == 0) {
    return std::nullopt;
  }
  if (alignment_polynomial(cfg, wall.v, wall.a, b, t2) != 0) {
    throw std::logic_error("alignment point is not on the numerical wall");
  }
  return AlignmentFunctional{b, t2, alignment_ratio(cfg, wall.v, wall.a, b, t2)};
}

std::vector<MukaiVector> find_classes(const WallLattice& wall, const Integer& d, const Integer& m) {
  std::vector<MukaiVector> out;
  for (const auto& [p, q] : classes_in_rank2(wall.gram, d, m)) {
    out.push_back(wall.element(p, q));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Spherical s in the wall lattice with (s, v) < 0 and phi(s) > 0.
std::vector<MukaiVector> effective_negative_sphericals(const WallLattice& wall,
                                                       const AlignmentFunctional& phi) {
  const Integer disc = wall.gram.discriminant();
  const Rational a(wall.gram.q11), b(wall.gram.q12), neg_disc(Integer(-disc));
  const Rational kappa = phi.phi_a - b / a;
  const Rational c = 1 / (a * a) - kappa * kappa / neg_disc;
  Integer bound;
  if (c > 0) {
    // phi(s) > 0 with s^2 = -2 forces (s, v)^2 < 2 A kappa^2 / (-disc c)
    const Integer cap = floor_of(2 * a * kappa * kappa / (neg_disc * c));
    mpz_sqrt(bound.get_mpz_t(), cap.get_mpz_t());
    bound += 1;
  } else {
    bound = 16 * wall.gram.q11;
  }
  std::vector<MukaiVector> out;
  for (Integer m = -1; m >= -bound; --m) {
    for (const auto& [p, q] : classes_in_rank2(wall.gram, Integer(-2), m)) {
      if (phi(p, q) > 0) {
        out.push_back(wall.element(p, q));
      }
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

std::vector<AlignmentFunctional> alignment_points(const K3Config& cfg, const WallLattice& wall) {
  std::vector<AlignmentFunctional> out;
  if (auto top = alignment_functional(cfg, wall)) {
    out.push_back(*top);
  }
  const NumericalWall nw = numerical_wall(cfg, wall.v, wall.a);
  if (nw.shape != NumericalWall::Shape::Semicircle) {
    return out;
  }
  // rational end points just inside the semicircle
  Integer scaled;
  const Integer scale = Integer(1) << 20;
  mpz_sqrt(scaled.get_mpz_t(), Integer(floor_of(nw.radius_sq * scale * scale)).get_mpz_t());
  const Rational radius_lo = ratio(scaled, scale);
  std::vector<Rational> cuts = {nw.center_b - radius_lo};
  for (const auto& hole : holes(cfg, wall.v, wall.a, Integer(4 * wall.gram.q11))) {
    if (abs(Rational(hole.b - nw.center_b)) < radius_lo) {
      cuts.push_back(hole.b);
    }
  }
  cuts.push_back(nw.center_b + radius_lo);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.size() <= 2) {
    return out;
  }
  // one point inside every arc between consecutive holes
  static const std::pair<long, long> fractions[] = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 8}, {7, 8}};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    for (const auto& [num, den] : fractions) {
      const Rational b = cuts[i] + (cuts[i + 1] - cuts[i]) * ratio(Integer(num), Integer(den));
      const auto t2 = nw.t2_at(b);
      if (!t2 || *t2 <= 0) continue;
      if (auto f = functional_at(cfg, wall, b, *t2)) {
        out.push_back(*f);
        break;
      }
    }
  }
  return out;
}

std::optional<AlignmentFunctional> alignment_functional(const K3Config& cfg,
                                                        const WallLattice& wall) {
  const NumericalWall nw = numerical_wall(cfg, wall.v, wall.a);
  if (nw.shape == NumericalWall::Shape::Semicircle) {
    if (auto f = functional_at(cfg, wall, nw.center_b, nw.radius_sq)) {
      return f;
    }
    const Rational span = std::min(nw.radius_sq, Rational(1, 2));
    for (long k = 2; k < 64; ++k) {
      for (int sign : {1, -1}) {
        const Rational b = nw.center_b + Rational(sign) * span / k;
        if (auto t2 = nw.t2_at(b)) {
          if (auto f = functional_at(cfg, wall, b, *t2)) {
            return f;
          }
        }
      }
    }
  } else if (nw.shape == NumericalWall::Shape::VerticalLine) {
    for (long t2 = 2; t2 < 64; ++t2) {
      if (auto f = functional_at(cfg, wall, nw.line_b, Rational(t2))) {
        return f;
      }
    }
  }
  return std::nullopt;
}

WallVerdict classify(const K3Config& cfg, const WallLattice& wall) {
  WallVerdict verdict;
  const Integer disc = wall.gram.discriminant();
  const Integer& v2 = wall.gram.q11;
  auto certify = [&](const std::vector<MukaiVector>& classes, CertificateRole role) {
    for (const auto& c : classes) {
      verdict.certificates.push_back({c, role});
    }
    return !classes.empty();
  };

  if (disc == 0) {
    verdict.kind = WallKind::LagrangianBoundary;
    certify(find_classes(wall, Integer(0), Integer(0)), CertificateRole::IsotropicOrthogonal);
    return verdict;
  }
  if (disc > 0) {
    verdict.kind = WallKind::Fake;
    return verdict;
  }

  const bool hc = certify(find_classes(wall, Integer(0), Integer(1)),
                          CertificateRole::IsotropicPairingOne);
  const bool lgu = certify(find_classes(wall, Integer(0), Integer(2)),
                           CertificateRole::IsotropicPairingTwo);
  const bool bn = certify(find_classes(wall, Integer(-2), Integer(0)),
                          CertificateRole::SphericalOrthogonal);
  if (hc || lgu || bn) {
    verdict.kind = WallKind::Divisorial;
    verdict.divisorial = hc    ? DivisorialType::HilbertChow
                         : lgu ? DivisorialType::LiGiesekerUhlenbeck
                               : DivisorialType::BrillNoether;
  } else {
    bool spherical = false;
    for (Integer m = 1; 2 * m <= v2; ++m) {
      spherical |= certify(find_classes(wall, Integer(-2), m), CertificateRole::SphericalFlop);
    }
    bool positive = false;
    for (const auto& sol : decomposition_solutions(cfg, wall.v, wall.a)) {
      if (!sol.spherical) {
        verdict.certificates.push_back({sol.a, CertificateRole::PositivePart});
        verdict.certificates.push_back({sol.b, CertificateRole::PositivePart});
        positive = true;
      }
    }
    if (spherical || positive) {
      verdict.kind = WallKind::Flopping;
      verdict.trigger = spherical ? FlopTrigger::Spherical : FlopTrigger::PositiveSum;
    } else {
      verdict.kind = WallKind::Fake;
    }
  }

  // Totally semistable: isotropic w with (w, v) = 1, or an effective spherical
  // s with (s, v) < 0. Effectivity of spherical classes flips across their
  // holes on the wall, so each arc is tried; an arc admitting stable objects wins.
  verdict.totally_semistable = hc;
  const auto points = alignment_points(cfg, wall);
  std::vector<std::vector<MukaiVector>> negatives;
  for (const auto& phi : points) {
    negatives.push_back(effective_negative_sphericals(wall, phi));
  }
  std::size_t chosen = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!hc && negatives[i].empty() != negatives[0].empty()) {
      verdict.arc_dependent = true;
    }
    if (negatives[i].empty() && !negatives[chosen].empty()) {
      chosen = i;
    }
  }
  if (!points.empty()) {
    verdict.phi = points[chosen];
    for (const auto& s : negatives[chosen]) {
      verdict.certificates.push_back({s, CertificateRole::EffectiveNegative});
    }
    if (!negatives[chosen].empty()) {
      verdict.proxy_decisive = !hc;
      verdict.totally_semistable = true;
    }
  }
  return verdict;
}

std::vector<LatticePoint2> effective_classes_in_strip(const WallLattice& wall,
                                                      const AlignmentFunctional& phi) {
  const Rational a(wall.gram.q11), b(wall.gram.q12), c(wall.gram.q22);
  // kernel direction of phi is (-phi_a, 1); it is negative on the wall
  const Rational k2 = a * phi.phi_a * phi.phi_a - 2 * b * phi.phi_a + c;
  if (k2 >= 0) {
    throw std::domain_error("kernel of the alignment functional is not negative");
  }
  const Rational l = abs(Rational(b - a * phi.phi_a));
  const Integer q_max = floor_of((2 * l + a + 2) / (-k2)) + 1;
  std::vector<LatticePoint2> out;
  for (Integer q = -q_max; q <= q_max; ++q) {
    const Integer p = floor_of(Rational(-q) * phi.phi_a) + 1;
    const Rational value = phi(p, q);
    if (value <= 0 || value >= 1) {
      continue;
    }
    const Integer sq = wall.gram.value(p, q);
    if (sq < -2 || sq == -1) {
      continue;
    }
    if (sq >= 0 && wall.gram.bilinear(p, q, 1, 0) <= 0) {
      continue;
    }
    out.emplace_back(p, q);
  }
  return out;
}

DecompositionSearch effective_decompositions(const K3Config& cfg, const WallLattice& wall,
                                             const AlignmentFunctional& phi,
                                             const DecompositionLimits& limits) {
  (void)cfg;
  const auto classes = effective_classes_in_strip(wall, phi);
  auto cross = [](const LatticePoint2& x, const LatticePoint2& y) {
    return Integer(x.first * y.second - x.second * y.first);
  };
  // extreme rays of the cone spanned by classes[i..]; all classes lie in phi > 0
  std::vector<std::pair<LatticePoint2, LatticePoint2>> hull(classes.size());
  for (std::size_t i = classes.size(); i-- > 0;) {
    hull[i] = {classes[i], classes[i]};
    if (i + 1 < classes.size()) {
      auto [lo, hi] = hull[i + 1];
      if (cross(classes[i], lo) > 0) lo = classes[i];
      if (cross(hi, classes[i]) > 0) hi = classes[i];
      hull[i] = {lo, hi};
    }
  }
  DecompositionSearch out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const LatticePoint2&)> search =
      [&](std::size_t start, const LatticePoint2& rest) {
        for (std::size_t i = start; i < classes.size() && !out.truncated; ++i) {
          const LatticePoint2 next{rest.first - classes[i].first, rest.second - classes[i].second};
          chosen.push_back(i);
          if (next.first == 0 && next.second == 0) {
            if (chosen.size() >= 2) {
              Decomposition dec;
              for (std::size_t j : chosen) {
                dec.parts.push_back(wall.element(classes[j].first, classes[j].second));
              }
              if (chosen.size() == 2) {
                dec.refinable =
                    !lattice_points_in_parallelogram(wall.gram, classes[chosen[0]], {1, 0}).empty();
              }
              out.found.push_back(std::move(dec));
              out.truncated = out.found.size() >= limits.max_results;
            }
          } else if (phi(next.first, next.second) > 0 && cross(hull[i].first, next) >= 0 &&
                     cross(next, hull[i].second) >= 0) {
            if (chosen.size() + 1 >= limits.max_parts) {
              out.truncated = true;
            } else {
              search(i, next);
            }
          }
          chosen.pop_back();
        }
      };
  search(0, {1, 0});
  return out;
}

BundleDescriptor bundle_descriptor(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a) {
  BundleDescriptor d;
  d.a = a;
  d.b = v - a;
  d.fiber_dim = pairing(cfg, d.b, a) - 1;
  if (d.fiber_dim < 1) {
    throw std::invalid_argument("bundle_descriptor: (v - a, a) - 1 must be at least 1");
  }
  d.base_dims = {square(cfg, d.a) + 2, square(cfg, d.b) + 2};
  d.total_dim = d.base_dims.first + d.base_dims.second + d.fiber_dim;
  d.codim = d.fiber_dim;
  return d;
}

std::string BundleDescriptor::describe() const {
  auto factor = [](const MukaiVector& x, const Integer& dim) {
    return dim == 0 ? std::string("pt") : "M" + to_string(x) + "[dim " + to_string(dim) + "]";
  };
  return "P^" + to_string(fiber_dim) + "-bundle over " + factor(a, base_dims.first) + " x " +
         factor(b, base_dims.second);
}

}  // namespace mukai
