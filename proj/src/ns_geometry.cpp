#include "mukai/ns_geometry.hpp"

#include "mukai/diophantine.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace mukai {

NSBasis lambda_basis(const K3Config& cfg, const MukaiVector& v) {
  if (!is_primitive(v)) {
    throw std::invalid_argument("lambda_basis: v must be primitive, got " + to_string(v));
  }
  const Integer v2 = square(cfg, v);
  if (v2 <= 0) {
    throw std::invalid_argument("lambda_basis: v^2 must be positive");
  }
  NSBasis basis;
  basis.n = v2 / 2 + 1;
  if (v(0) == 1 && v(1) == 0) {
    basis.e1 = MukaiVector(Integer(-1), Integer(0), v(2));
    basis.e2 = mukai_vector(0, -1, 0);
    basis.label1 = "δ";
    basis.label2 = "H";
    basis.hilbert_type = true;
    return basis;
  }
  const Vec3<Integer> f(Integer(-v(2)), Integer(v(1) * cfg.h2()), Integer(-v(0)));
  const Mat3<Integer> u = unimodular_completion(f);
  auto [e1, e2] = reduce_euclidean(u.col(1), u.col(2));
  auto orient = [](MukaiVector& e) {
    for (int i = 0; i < 3; ++i) {
      if (e(i) != 0) {
        if (e(i) < 0) {
          e = -e;
        }
        return;
      }
    }
  };
  orient(e1);
  orient(e2);
  if (lex_less(e2, e1) && e1.dot(e1) == e2.dot(e2)) {
    std::swap(e1, e2);
  }
  basis.e1 = e1;
  basis.e2 = e2;
  return basis;
}

NSClass to_ns(const K3Config& cfg, const NSBasis& basis, const MukaiVector& x) {
  const auto c = coordinates_in(basis.e1, basis.e2, x);
  if (!c || (*c)(0).get_den() != 1 || (*c)(1).get_den() != 1) {
    throw std::invalid_argument("to_ns: " + to_string(x) + " is not in v^perp");
  }
  NSClass d;
  d.coords = Vec2<Integer>((*c)(0).get_num(), (*c)(1).get_num());
  d.bbf_square = square(cfg, x);
  return d;
}

NSClass wall_divisor(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a,
                     const NSBasis& basis) {
  const MukaiVector proj = a * square(cfg, v) - v * pairing(cfg, a, v);
  if (is_zero(proj)) {
    throw std::invalid_argument("wall_divisor: a is proportional to v");
  }
  return to_ns(cfg, basis, primitive_part(proj));
}

Integer divisibility(const K3Config& cfg, const MukaiVector& v, const MukaiVector& d) {
  // y = (r', L, s') with H.L = l arbitrary: (x, y) = c_x l - r_x s' - s_x r'.
  // The constraint (v, y) = 0 cuts out a rank-2 lattice of (l, s', r').
  const Vec3<Integer> fv(v(1), Integer(-v(0)), Integer(-v(2)));
  const Vec3<Integer> fd(d(1), Integer(-d(0)), Integer(-d(2)));
  const Mat3<Integer> u = unimodular_completion(fv);
  const Integer g = gcd_of(fd.dot(u.col(1)), fd.dot(u.col(2)));
  if (g == 0) {
    throw std::invalid_argument("divisibility of the zero class");
  }
  (void)cfg;
  return g;
}

CurveClass curve_class(const K3Config& cfg, const MukaiVector& v, const NSBasis& basis,
                       const NSClass& d) {
  CurveClass r;
  r.divisor = d;
  r.divisibility = divisibility(cfg, v, basis.vector_of(d.coords));
  r.coords(0) = ratio(d.coords(0), r.divisibility);
  r.coords(1) = ratio(d.coords(1), r.divisibility);
  r.coords(0).canonicalize();
  r.coords(1).canonicalize();
  r.bbf_square = ratio(d.bbf_square, Integer(r.divisibility * r.divisibility));
  r.bbf_square.canonicalize();
  return r;
}

namespace {

std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [coef, label] : terms) {
    if (coef == 0) {
      continue;
    }
    Rational mag = abs(coef);
    mag.canonicalize();
    if (coef < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag.get_den() != 1) {
      out += "(" + to_string(mag) + ")";
    } else if (mag != 1) {
      out += to_string(mag);
    }
    out += label;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_divisor(const NSBasis& basis, const NSClass& d) {
  const Rational x(d.coords(0)), y(d.coords(1));
  if (basis.hilbert_type) {
    return format_terms({{y, basis.label2}, {x, basis.label1}});
  }
  return format_terms({{x, basis.label1}, {y, basis.label2}});
}

std::string format_curve(const NSBasis& basis, const CurveClass& r) {
  if (basis.hilbert_type) {
    Rational dual_coef = r.coords(0) * Rational(Integer(2 * basis.n - 2));
    dual_coef.canonicalize();
    return format_terms({{r.coords(1), basis.label2}, {dual_coef, basis.label1 + "^∨"}});
  }
  return format_terms({{r.coords(0), basis.label1}, {r.coords(1), basis.label2}});
}

}  // namespace mukai
