#pragma once

// Exact scalar types used throughout the library and the Eigen glue that lets
// them live inside fixed-size dense matrices.

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <string>

namespace mukai {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

/// Integer square root when n is a perfect square, nullopt otherwise.
std::optional<Integer> exact_sqrt(const Integer& n);
std::optional<Rational> exact_sqrt(const Rational& q);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Integer gcd_of(const Integer& a, const Integer& b);

/// Canonical exact string: "-5/2", "3", "0".
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Parse "a" or "a/b" (optionally signed). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

inline Rational to_rational(const Integer& n) { return Rational(n); }
/// n / d in canonical form; the two-argument mpq_class constructor does not reduce.
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace mukai

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
