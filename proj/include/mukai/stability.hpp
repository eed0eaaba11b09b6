#pragma once

// The (b, t) upper half-plane of geometric stability conditions sigma_{tH, bH}
// with central charge Z(x) = (exp(bH + i tH), x). Everything is expressed in
// terms of t^2, which keeps all quantities rational: Z(x) = re + i t mu.

#include "mukai/lattice.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mukai {

struct GeomCharge {
  Rational re;
  Rational mu;  // Im Z = t * mu
  Rational t2;

  friend bool operator==(const GeomCharge&, const GeomCharge&) = default;
};

GeomCharge central_charge(const K3Config& cfg, const MukaiVector& x, const Rational& b,
                          const Rational& t2);

/// Im(conj Z(v) Z(a)) / t, linear in t^2.
Rational alignment_polynomial(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a,
                              const Rational& b, const Rational& t2);

struct NumericalWall {
  enum class Shape { Semicircle, VerticalLine, Empty, Everywhere };
  Shape shape = Shape::Empty;
  Rational center_b;   // Semicircle
  Rational radius_sq;  // Semicircle
  Rational line_b;     // VerticalLine

  /// t^2 of the wall above b, if the vertical line through b meets it.
  std::optional<Rational> t2_at(const Rational& b) const;
};

/// Zero locus of Im(conj Z(v) Z(a)) as a curve in (b, t^2): the semicircle
/// (b - center)^2 + t^2 = radius^2, a vertical line, or nothing.
NumericalWall numerical_wall(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a);

struct Hole {
  Rational b;
  Rational t2;
  MukaiVector spherical;  // positive rank, Z(spherical) = 0 at (b, t^2)
};

/// Spherical class of positive rank whose charge vanishes at (b, t^2).
std::optional<MukaiVector> hole_at(const K3Config& cfg, const Rational& b, const Rational& t2);

/// The unique (b, t^2) with Z(s) = 0 for a spherical s of non-zero rank.
std::optional<Hole> hole_of(const K3Config& cfg, const MukaiVector& s);

/// Holes of the spherical classes in <v, a> with |(s, v)| <= pairing_bound.
std::vector<Hole> holes(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a,
                        const Integer& pairing_bound);

/// Holes on the vertical line b = b0 with t2_min < t^2 (< t2_max when given).
/// When t2_min is 0 the ranks are capped at max_rank.
std::vector<Hole> holes_on_line(const K3Config& cfg, const Rational& b0, const Rational& t2_min,
                                const std::optional<Rational>& t2_max, long max_rank = 64);

/// False exactly when Z(s) lies on the closed negative real axis for some
/// spherical s of positive rank.
bool in_geometric_region(const K3Config& cfg, const Rational& b, const Rational& t2);

/// phi(x) = Z(x)/Z(v) for x aligned with v, i.e. Re(Z(x) conj Z(v)) / |Z(v)|^2.
Rational alignment_ratio(const K3Config& cfg, const MukaiVector& v, const MukaiVector& x,
                         const Rational& b, const Rational& t2);

/// Im(Omega conj Z(v)) / t, a class in v^perp. It lies on the positive side
/// of the movable cone chamber structure and on a wall ray exactly when
/// (b, t^2) lies on the corresponding numerical wall.
Vec3<Rational> nef_direction(const K3Config& cfg, const MukaiVector& v, const Rational& b,
                             const Rational& t2);

struct PathCrossing {
  Rational t2;
  std::size_t wall_index = 0;
  std::optional<MukaiVector> hole_collision;
};

struct PathResult {
  std::vector<PathCrossing> crossings;  // descending in t^2
  std::vector<Hole> holes;              // holes on the path inside the range
  std::vector<std::size_t> walls_containing_path;
};

/// Crossings of the vertical path b = b0, t^2 in (t2_min, t2_max), with the
/// numerical walls <v, walls[i]>.
PathResult path_crossings(const K3Config& cfg, const MukaiVector& v,
                          std::span<const MukaiVector> walls, const Rational& b0,
                          const Rational& t2_min, const std::optional<Rational>& t2_max);

}  // namespace mukai
