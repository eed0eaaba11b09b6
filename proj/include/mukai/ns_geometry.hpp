#pragma once

// Neron-Severi side of the Mukai morphism: v^perp is identified with NS(M).
// Classes are stored by integer coordinates in a basis of v^perp.

#include "mukai/lattice.hpp"

#include <string>

namespace mukai {

struct NSBasis {
  MukaiVector e1;
  MukaiVector e2;
  std::string label1 = "e1";
  std::string label2 = "e2";
  /// v = (1, 0, 1 - n): e1 = delta = (-1, 0, 1 - n), e2 = H = (0, -1, 0).
  bool hilbert_type = false;
  /// Half the dimension of M(v).
  Integer n;

  MukaiVector vector_of(const Vec2<Integer>& coords) const { return e1 * coords(0) + e2 * coords(1); }
};

struct NSClass {
  Vec2<Integer> coords;  // w.r.t. (e1, e2)
  Integer bbf_square;

  friend bool operator==(const NSClass&, const NSClass&) = default;
};

struct CurveClass {
  NSClass divisor;
  Integer divisibility;
  Vec2<Rational> coords;  // divisor / divisibility, w.r.t. (e1, e2)
  Rational bbf_square;
};

/// Basis of v^perp. Throws std::invalid_argument unless v is primitive with v^2 > 0.
NSBasis lambda_basis(const K3Config& cfg, const MukaiVector& v);

/// Coordinates of x in v^perp. Throws std::invalid_argument when x is not in v^perp.
NSClass to_ns(const K3Config& cfg, const NSBasis& basis, const MukaiVector& x);

/// Primitive integral generator of the projection of a to v^perp, signed as a
/// positive multiple of the projection.
NSClass wall_divisor(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a,
                     const NSBasis& basis);

/// Divisibility of D in H^2(M, Z) = v^perp inside the full (unimodular) Mukai
/// lattice: gcd of (D, y) over all y in v^perp, transcendental part included.
Integer divisibility(const K3Config& cfg, const MukaiVector& v, const MukaiVector& d);

CurveClass curve_class(const K3Config& cfg, const MukaiVector& v, const NSBasis& basis,
                       const NSClass& d);

/// "4H-3δ" for the Hilbert basis, "2e1-e2" otherwise.
std::string format_divisor(const NSBasis& basis, const NSClass& d);
/// "H-6δ^∨" for the Hilbert basis (δ^∨ = δ / (2n - 2)), rational coordinates otherwise.
std::string format_curve(const NSBasis& basis, const CurveClass& r);

}  // namespace mukai
