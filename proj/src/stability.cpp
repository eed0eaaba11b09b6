#include "mukai/stability.hpp"

#include "mukai/diophantine.hpp"

#include <algorithm>
#include <stdexcept>

namespace mukai {

GeomCharge central_charge(const K3Config& cfg, const MukaiVector& x, const Rational& b,
                          const Rational& t2) {
  const Rational h(cfg.h2());
  const Rational r(x(0)), c(x(1)), s(x(2));
  GeomCharge z;
  z.re = h * b * c - s - r * (b * b - t2) * h / 2;
  z.mu = h * (c - r * b);
  z.t2 = t2;
  return z;
}

Rational alignment_polynomial(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a,
                              const Rational& b, const Rational& t2) {
  const GeomCharge zv = central_charge(cfg, v, b, t2);
  const GeomCharge za = central_charge(cfg, a, b, t2);
  return zv.re * za.mu - za.re * zv.mu;
}

std::optional<Rational> NumericalWall::t2_at(const Rational& b) const {
  if (shape != Shape::Semicircle) {
    return std::nullopt;
  }
  const Rational t2 = radius_sq - (b - center_b) * (b - center_b);
  if (t2 <= 0) {
    return std::nullopt;
  }
  return t2;
}

NumericalWall numerical_wall(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a) {
  // Im(conj Z(v) Z(a)) / (t h) = (h/2) alpha (b^2 + t^2) + beta b + gamma
  const Rational h(cfg.h2());
  const Rational alpha(v(0) * a(1) - a(0) * v(1));
  const Rational beta(v(2) * a(0) - a(2) * v(0));
  const Rational gamma(a(2) * v(1) - v(2) * a(1));
  NumericalWall wall;
  if (alpha != 0) {
    const Rational center = -beta / (h * alpha);
    const Rational radius_sq = center * center - 2 * gamma / (h * alpha);
    if (radius_sq > 0) {
      wall.shape = NumericalWall::Shape::Semicircle;
      wall.center_b = center;
      wall.radius_sq = radius_sq;
    }
    return wall;
  }
  if (beta != 0) {
    wall.shape = NumericalWall::Shape::VerticalLine;
    wall.line_b = -gamma / beta;
  } else if (gamma == 0) {
    wall.shape = NumericalWall::Shape::Everywhere;
  }
  return wall;
}

std::optional<MukaiVector> hole_at(const K3Config& cfg, const Rational& b, const Rational& t2) {
  if (t2 <= 0) {
    return std::nullopt;
  }
  // Z(s) = 0 forces b = c/r and t^2 = 2 / (H^2 r^2).
  Rational r_sq = Rational(2) / (Rational(cfg.h2()) * t2);
  r_sq.canonicalize();
  if (r_sq.get_den() != 1) {
    return std::nullopt;
  }
  const auto r = exact_sqrt(Integer(r_sq.get_num()));
  if (!r) {
    return std::nullopt;
  }
  Rational c = b * *r;
  c.canonicalize();
  if (c.get_den() != 1) {
    return std::nullopt;
  }
  const Integer ci = c.get_num();
  const Integer num = ci * ci * cfg.h2() + 2;
  if (num % (2 * *r) != 0) {
    return std::nullopt;
  }
  return MukaiVector(*r, ci, Integer(num / (2 * *r)));
}

std::optional<Hole> hole_of(const K3Config& cfg, const MukaiVector& s) {
  if (square(cfg, s) != -2 || s(0) == 0) {
    return std::nullopt;
  }
  const MukaiVector pos = s(0) > 0 ? s : MukaiVector(-s);
  Hole hole;
  hole.b = ratio(pos(1), pos(0));
  hole.b.canonicalize();
  hole.t2 = Rational(2) / Rational(Integer(cfg.h2() * pos(0) * pos(0)));
  hole.t2.canonicalize();
  hole.spherical = pos;
  return hole;
}

std::vector<Hole> holes(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a,
                        const Integer& pairing_bound) {
  const GramForm2 form = gram_of(cfg, v, a);
  std::vector<Hole> out;
  for (Integer m = -pairing_bound; m <= pairing_bound; ++m) {
    for (const auto& [p, q] : classes_in_rank2(form, Integer(-2), m)) {
      const MukaiVector s = v * p + a * q;
      if (s(0) <= 0) {
        continue;  // -s has the same hole
      }
      if (auto h = hole_of(cfg, s)) {
        out.push_back(*h);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Hole& x, const Hole& y) {
    return x.t2 != y.t2 ? x.t2 > y.t2 : lex_less(x.spherical, y.spherical);
  });
  return out;
}

std::vector<Hole> holes_on_line(const K3Config& cfg, const Rational& b0, const Rational& t2_min,
                                const std::optional<Rational>& t2_max, long max_rank) {
  Rational b = b0;
  b.canonicalize();
  const Integer den = b.get_den();
  const Integer num = b.get_num();
  std::vector<Hole> out;
  for (Integer k = 1;; ++k) {
    const Integer r = k * den;
    const Rational t2 = Rational(2) / Rational(Integer(cfg.h2() * r * r));
    if (t2 <= t2_min || (t2_min == 0 && r > max_rank)) {
      break;
    }
    if (t2_max && t2 >= *t2_max) {
      continue;
    }
    const Integer c = k * num;
    const Integer top = c * c * cfg.h2() + 2;
    if (top % (2 * r) == 0) {
      Hole hole;
      hole.b = b;
      hole.t2 = t2;
      hole.t2.canonicalize();
      hole.spherical = MukaiVector(r, c, Integer(top / (2 * r)));
      out.push_back(hole);
    }
  }
  return out;
}

bool in_geometric_region(const K3Config& cfg, const Rational& b, const Rational& t2) {
  if (t2 <= 0) {
    return false;
  }
  Rational bb = b;
  bb.canonicalize();
  const Integer den = bb.get_den();
  for (Integer k = 1;; ++k) {
    const Integer r = k * den;
    // Z(s) real and <= 0 needs t^2 <= 2 / (H^2 r^2)
    if (Rational(Integer(cfg.h2() * r * r)) * t2 > 2) {
      return true;
    }
    const Integer c = k * bb.get_num();
    if ((c * c * cfg.h2() + 2) % (2 * r) == 0) {
      return false;
    }
  }
}

Rational alignment_ratio(const K3Config& cfg, const MukaiVector& v, const MukaiVector& x,
                         const Rational& b, const Rational& t2) {
  const GeomCharge zv = central_charge(cfg, v, b, t2);
  const GeomCharge zx = central_charge(cfg, x, b, t2);
  const Rational norm = zv.re * zv.re + t2 * zv.mu * zv.mu;
  if (norm == 0) {
    throw std::domain_error("alignment_ratio: Z(v) vanishes");
  }
  return (zx.re * zv.re + t2 * zx.mu * zv.mu) / norm;
}

Vec3<Rational> nef_direction(const K3Config& cfg, const MukaiVector& v, const Rational& b,
                             const Rational& t2) {
  const GeomCharge z = central_charge(cfg, v, b, t2);
  const Rational h(cfg.h2());
  Vec3<Rational> w;
  w(0) = -z.mu;
  w(1) = z.re - b * z.mu;
  w(2) = h / 2 * (2 * b * z.re - (b * b - t2) * z.mu);
  return w;
}

PathResult path_crossings(const K3Config& cfg, const MukaiVector& v,
                          std::span<const MukaiVector> walls, const Rational& b0,
                          const Rational& t2_min, const std::optional<Rational>& t2_max) {
  PathResult out;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const Rational w0 = alignment_polynomial(cfg, v, walls[i], b0, Rational(0));
    const Rational w1 = alignment_polynomial(cfg, v, walls[i], b0, Rational(1)) - w0;
    if (w1 == 0) {
      if (w0 == 0) {
        out.walls_containing_path.push_back(i);
      }
      continue;
    }
    Rational t2 = -w0 / w1;
    t2.canonicalize();
    if (t2 <= 0 || t2 <= t2_min || (t2_max && t2 >= *t2_max)) {
      continue;
    }
    PathCrossing crossing;
    crossing.t2 = t2;
    crossing.wall_index = i;
    crossing.hole_collision = hole_at(cfg, b0, t2);
    out.crossings.push_back(crossing);
  }
  std::stable_sort(out.crossings.begin(), out.crossings.end(),
                   [](const PathCrossing& x, const PathCrossing& y) { return x.t2 > y.t2; });
  out.holes = holes_on_line(cfg, b0, t2_min, t2_max);
  return out;
}

}  // namespace mukai
