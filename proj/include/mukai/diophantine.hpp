#pragma once

// Exact solvers for the binary quadratic problems behind wall enumeration:
// classes of prescribed square and prescribed pairing with v, in the ambient
// rank-3 lattice or inside a rank-2 wall lattice.

#include "mukai/lattice.hpp"

#include <utility>
#include <vector>

namespace mukai {

/// Gram matrix [[q11, q12], [q12, q22]] of a rank-2 lattice in a basis (v, a).
struct GramForm2 {
  Integer q11;
  Integer q12;
  Integer q22;

  /// q11 q22 - q12^2; negative for signature (1,1).
  Integer discriminant() const { return q11 * q22 - q12 * q12; }
  Integer value(const Integer& p, const Integer& q) const {
    return q11 * p * p + 2 * q12 * p * q + q22 * q * q;
  }
  Integer bilinear(const Integer& p1, const Integer& q1, const Integer& p2,
                   const Integer& q2) const {
    return q11 * p1 * p2 + q12 * (p1 * q2 + q1 * p2) + q22 * q1 * q2;
  }
  Mat2<Integer> matrix() const;

  friend bool operator==(const GramForm2&, const GramForm2&) = default;
};

GramForm2 gram_of(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a);

using LatticePoint2 = std::pair<Integer, Integer>;

/// Unimodular U with f^T U = (g, 0, 0), g = gcd(f) > 0. Columns 1 and 2 of U
/// span the integral kernel of f.
Mat3<Integer> unimodular_completion(const Vec3<Integer>& f);

/// Lagrange-Gauss reduction of a rank-2 basis in the Euclidean norm of Z^3.
std::pair<MukaiVector, MukaiVector> reduce_euclidean(MukaiVector e1, MukaiVector e2);

/// Rational coordinates of x in span(e1, e2); nullopt when x is outside it.
std::optional<Vec2<Rational>> coordinates_in(const MukaiVector& e1, const MukaiVector& e2,
                                             const MukaiVector& x);

struct SquareSolutions {
  std::vector<MukaiVector> classes;
  /// The two-parameter elimination degenerated and a bounded triple scan was used.
  bool fallback_scan = false;
};

/// All a with (a,a) = d and (a,v) = m whose free parameter lies in
/// [-window, window]. The solutions are parametrised as a0 + i k1 + j k2 with
/// (k1, k2) a reduced basis of v^perp; i is scanned and j solved exactly.
/// Throws std::invalid_argument unless d is even, d >= -2 and 0 <= m <= v^2/2.
SquareSolutions solve_square_with_pairing(const K3Config& cfg, const MukaiVector& v,
                                          const Integer& d, const Integer& m,
                                          const Integer& window);

/// Non-zero x = p v + q a in the lattice with Gram `form` (basis v, a) such
/// that x^2 = d and (x, v) = pairing_with_v. For a degenerate form the null
/// direction is reported by its two primitive generators only.
std::vector<LatticePoint2> classes_in_rank2(const GramForm2& form, const Integer& d,
                                            const Integer& pairing_with_v);

/// Lattice points of Z^2 in the closed parallelogram 0, a, v - a, v, vertices
/// excluded. The form does not affect the answer; it is accepted so callers
/// can pass wall-lattice data unchanged.
std::vector<LatticePoint2> lattice_points_in_parallelogram(const GramForm2& form,
                                                           const LatticePoint2& a,
                                                           const LatticePoint2& v);

struct DecompositionSolution {
  Integer x;  // a = x a_i + y v
  Integer y;
  MukaiVector a;
  MukaiVector b;  // v - a
  Integer a_square;
  Integer a_pairing;
  bool spherical = false;  // a^2 = -2; otherwise a is positive
};

/// Integer (x, y) with a = x a_i + y v, 0 < (a, v) <= v^2/2 and either
/// a^2 >= 0 (positive) or a^2 = -2 (spherical). Empty unless <v, a_i> has
/// signature (1,1).
std::vector<DecompositionSolution> decomposition_solutions(const K3Config& cfg,
                                                           const MukaiVector& v,
                                                           const MukaiVector& a_i);

}  // namespace mukai
