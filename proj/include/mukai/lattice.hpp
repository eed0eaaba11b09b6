#pragma once

// Algebraic Mukai lattice of a K3 surface with Picard group Z·H.
//
// A class is a triple (r, c, s): rank, coefficient of H, and the degree-4
// part. The pairing is (x, y) = c_x c_y H^2 - r_x s_y - r_y s_x.

#include "mukai/scalar.hpp"

#include <string>
#include <vector>

namespace mukai {

class K3Config {
 public:
  explicit K3Config(long genus);

  long genus() const { return genus_; }
  /// H^2 = 2g - 2.
  long h2() const { return 2 * genus_ - 2; }

 private:
  long genus_;
};

using MukaiVector = Vec3<Integer>;
using IsometryMatrix = Mat3<Integer>;

inline MukaiVector mukai_vector(long r, long c, long s) {
  return MukaiVector(Integer(r), Integer(c), Integer(s));
}

/// Gram matrix of the pairing in the standard basis.
template <typename Scalar>
Mat3<Scalar> gram(const K3Config& cfg) {
  Mat3<Scalar> g = Mat3<Scalar>::Zero();
  g(0, 2) = Scalar(-1);
  g(2, 0) = Scalar(-1);
  g(1, 1) = Scalar(cfg.h2());
  return g;
}

template <typename Scalar>
Scalar pairing(const K3Config& cfg, const Vec3<Scalar>& x, const Vec3<Scalar>& y) {
  return Scalar(x(1) * y(1) * cfg.h2() - x(0) * y(2) - y(0) * x(2));
}

template <typename Scalar>
Scalar square(const K3Config& cfg, const Vec3<Scalar>& x) {
  return pairing(cfg, x, x);
}

bool is_zero(const MukaiVector& x);
bool is_primitive(const MukaiVector& x);
Integer content(const MukaiVector& x);
/// x divided by the gcd of its entries (x must be non-zero).
MukaiVector primitive_part(const MukaiVector& x);
bool proportional(const MukaiVector& x, const MukaiVector& y);
bool lex_less(const MukaiVector& x, const MukaiVector& y);

/// dim M(v) = v^2 + 2. Throws std::invalid_argument when v^2 < -2.
Integer moduli_dim(const K3Config& cfg, const MukaiVector& v);

/// n with dim = 2n, i.e. v^2/2 + 1. Requires v^2 >= 2.
Integer hilbert_n(const K3Config& cfg, const MukaiVector& v);

/// Multiplication by the Mukai vector (1, k, k^2 H^2/2) of O(kH).
MukaiVector tensor_by(const K3Config& cfg, const Integer& k, const MukaiVector& x);

/// Mukai vector of the line bundle O(kH).
MukaiVector line_bundle(const K3Config& cfg, const Integer& k);

/// x + (x, w) w. Throws std::invalid_argument unless w^2 = -2.
MukaiVector reflect_spherical(const K3Config& cfg, const MukaiVector& w, const MukaiVector& x);

/// (r, c, s) -> (r, -c, s).
MukaiVector dual(const MukaiVector& x);

/// A lattice isometry with its symbolic description and concrete matrix.
/// Equality is equality of matrices.
struct Isometry {
  enum class Kind { Identity, Tensor, Reflect, Dual, Composite };

  Kind kind = Kind::Identity;
  Integer k;                   // Tensor
  MukaiVector w;               // Reflect
  std::vector<Isometry> parts;  // Composite, in order of application
  IsometryMatrix matrix = IsometryMatrix::Identity();

  static Isometry identity();
  static Isometry tensor(const K3Config& cfg, const Integer& k);
  static Isometry reflect(const K3Config& cfg, const MukaiVector& w);
  static Isometry dual();
  /// parts[0] is applied first.
  static Isometry compose(std::vector<Isometry> parts);

  MukaiVector operator()(const MukaiVector& x) const { return matrix * x; }
  Isometry inverse() const;
  Integer determinant() const;
  std::string describe() const;

  friend bool operator==(const Isometry& a, const Isometry& b) { return a.matrix == b.matrix; }
};

/// Reflection in v(O(k)) after tensoring by O(k). For genus 2 and k = -2 this
/// is the map carrying (0,2,-1) to (1,0,-4).
Isometry twist_T(const K3Config& cfg, const Integer& k = Integer(-2));

Integer determinant(const IsometryMatrix& m);
/// Integral inverse of a unimodular matrix. Throws std::domain_error otherwise.
IsometryMatrix unimodular_inverse(const IsometryMatrix& m);

/// Flip a to -a when (a, v) < 0, so table comparisons are sign-insensitive.
MukaiVector sign_normalized(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a);

/// Parse "r,c,s". Throws std::invalid_argument.
MukaiVector parse_vector(const std::string& text);
std::string to_string(const MukaiVector& x);

}  // namespace mukai
