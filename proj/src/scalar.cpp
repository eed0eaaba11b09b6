#include "mukai/scalar.hpp"

#include <stdexcept>

namespace mukai {

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (sgn(n) < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  auto num = exact_sqrt(Integer(q.get_num()));
  auto den = exact_sqrt(Integer(q.get_den()));
  if (!num || !den) {
    return std::nullopt;
  }
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_of(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Integer ceil_of(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Integer parse_integer(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '+') {
    t.erase(0, 1);
  }
  if (t.empty() || t.find_first_not_of("-0123456789") != std::string::npos ||
      t.find('-', 1) != std::string::npos || t == "-") {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return Integer(t, 10);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const auto dot = text.find('.');
  if (slash == std::string::npos && dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("not a number: '" + text + "'");
    }
    const std::string whole = text.substr(0, dot);
    const bool negative = whole.find('-') != std::string::npos;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const Integer w = whole.empty() || whole == "-" || whole == "+" ? Integer(0) : parse_integer(whole);
    Rational q(abs(w) * scale + Integer(frac), scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  if (slash == std::string::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace mukai
