#pragma once

// Enumeration of the wall lattices <v, a> whose walls meet the movable cone.

#include "mukai/classify.hpp"

#include <string>
#include <vector>

namespace mukai {

enum class Sector {
  Movable,         // closed movable cone
  PositiveWindow,  // every wall found inside the scan window
};

struct EnumerationOptions {
  /// Range of the free parameter handed to solve_square_with_pairing;
  /// 0 selects the default 16 v^2.
  Integer window = 0;
  Sector sector = Sector::Movable;
  /// Re-run with the window doubled and compare.
  bool check_stability = true;
};

/// A wall together with its ray in NS(M)_R, oriented into the positive cone.
struct PlacedWall {
  WallLattice lattice;
  Vec2<Rational> ray;
  /// Divisorial or isotropic boundary: a candidate boundary of Mov.
  bool bounds_movable = false;
};

struct WallEnumeration {
  NSBasis basis;
  std::vector<PlacedWall> walls;  // ordered from the Hilbert-Chow side
  Vec2<Rational> reference;       // nef_direction at a generic point
  Rational reference_b;
  Rational reference_t2;
  Integer window;
  bool stable = true;
  bool lower_closed = true;  // Mov boundary found on each side
  bool upper_closed = true;
  std::vector<std::string> warnings;
};

/// All distinct wall lattices found for v with the given window, unordered.
std::vector<WallLattice> candidate_walls(const K3Config& cfg, const MukaiVector& v,
                                         const NSBasis& basis, const Integer& window);

/// Throws std::invalid_argument unless v is primitive with v^2 > 0.
WallEnumeration enumerate_walls(const K3Config& cfg, const MukaiVector& v,
                                const EnumerationOptions& options = {});

/// Default window 16 v^2.
Integer default_window(const K3Config& cfg, const MukaiVector& v);

/// Pairing on NS coordinates w.r.t. the basis.
Rational ns_pairing(const K3Config& cfg, const NSBasis& basis, const Vec2<Rational>& x,
                    const Vec2<Rational>& y);

/// Wall ray of D: D itself when isotropic, else the G-orthogonal direction,
/// oriented so that it pairs positively with the reference.
Vec2<Rational> wall_ray(const K3Config& cfg, const NSBasis& basis, const NSClass& d,
                        const Vec2<Rational>& reference);

/// Coordinates w.r.t. the basis of a rational class in v^perp.
/// Throws std::invalid_argument when x is outside span(e1, e2).
Vec2<Rational> ns_coordinates(const NSBasis& basis, const Vec3<Rational>& x);

/// Sign of det(x, y): positive when y is reached from x counter-clockwise.
int orientation(const Vec2<Rational>& x, const Vec2<Rational>& y);

}  // namespace mukai
