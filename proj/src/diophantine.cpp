#include "mukai/diophantine.hpp"

#include <algorithm>
#include <stdexcept>

namespace mukai {

Mat2<Integer> GramForm2::matrix() const {
  Mat2<Integer> m;
  m << q11, q12, q12, q22;
  return m;
}

GramForm2 gram_of(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a) {
  return GramForm2{square(cfg, v), pairing(cfg, v, a), square(cfg, a)};
}

Mat3<Integer> unimodular_completion(const Vec3<Integer>& f) {
  Vec3<Integer> row = f;
  Mat3<Integer> u = Mat3<Integer>::Identity();
  if (row(0) == 0 && row(1) == 0 && row(2) == 0) {
    throw std::invalid_argument("unimodular_completion of the zero form");
  }
  for (;;) {
    int pivot = -1;
    for (int i = 0; i < 3; ++i) {
      if (row(i) != 0 && (pivot < 0 || abs(row(i)) < abs(row(pivot)))) {
        pivot = i;
      }
    }
    bool reduced = true;
    for (int j = 0; j < 3; ++j) {
      if (j == pivot || row(j) == 0) {
        continue;
      }
      const Integer q = floor_div(row(j), row(pivot));
      row(j) -= q * row(pivot);
      u.col(j) -= u.col(pivot) * q;
      reduced = false;
    }
    if (reduced) {
      if (pivot != 0) {
        u.col(0).swap(u.col(pivot));
        std::swap(row(0), row(pivot));
      }
      if (row(0) < 0) {
        u.col(0) = -u.col(0);
      }
      return u;
    }
  }
}

namespace {

Integer norm2(const MukaiVector& x) { return x.dot(x); }

Integer round_div(const Integer& a, const Integer& b) {
  // nearest integer to a/b, b > 0, ties toward -infinity
  return floor_div(Integer(2 * a + b), Integer(2 * b));
}

}  // namespace

std::pair<MukaiVector, MukaiVector> reduce_euclidean(MukaiVector e1, MukaiVector e2) {
  if (norm2(e1) > norm2(e2)) {
    std::swap(e1, e2);
  }
  for (;;) {
    const Integer mu = round_div(e1.dot(e2), norm2(e1));
    if (mu == 0) {
      break;
    }
    e2 -= e1 * mu;
    if (norm2(e2) >= norm2(e1)) {
      break;
    }
    std::swap(e1, e2);
  }
  return {e1, e2};
}

std::optional<Vec2<Rational>> coordinates_in(const MukaiVector& e1, const MukaiVector& e2,
                                             const MukaiVector& x) {
  // pick the 2x2 minor with non-zero determinant
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Integer det = e1(i) * e2(j) - e1(j) * e2(i);
      if (det == 0) {
        continue;
      }
      Vec2<Rational> c;
      c(0) = ratio(x(i) * e2(j) - x(j) * e2(i), det);
      c(1) = ratio(e1(i) * x(j) - e1(j) * x(i), det);
      c(0).canonicalize();
      c(1).canonicalize();
      const Vec3<Rational> back = e1.cast<Rational>() * c(0) + e2.cast<Rational>() * c(1);
      if (back != x.cast<Rational>()) {
        return std::nullopt;
      }
      return c;
    }
  }
  throw std::invalid_argument("coordinates_in: e1 and e2 are dependent");
}

SquareSolutions solve_square_with_pairing(const K3Config& cfg, const MukaiVector& v,
                                          const Integer& d, const Integer& m,
                                          const Integer& window) {
  const Integer v2 = square(cfg, v);
  if (d < -2 || d % 2 != 0) {
    throw std::invalid_argument("solve_square_with_pairing: d must be even and >= -2");
  }
  if (m < 0 || 2 * m > v2) {
    throw std::invalid_argument("solve_square_with_pairing: need 0 <= m <= v^2/2, got m = " +
                                to_string(m));
  }
  SquareSolutions out;
  // (a, v) = f . a
  const Vec3<Integer> f(Integer(-v(2)), Integer(v(1) * cfg.h2()), Integer(-v(0)));
  const Mat3<Integer> u = unimodular_completion(f);
  const Integer g = f.dot(u.col(0));
  if (m % g != 0) {
    return out;
  }
  const MukaiVector a0 = u.col(0) * Integer(m / g);
  auto [k1, k2] = reduce_euclidean(u.col(1), u.col(2));
  if (square(cfg, k2) == 0) {
    if (square(cfg, k1) != 0) {
      std::swap(k1, k2);
    } else {
      k2 = k1 + k2;
    }
  }

  auto push = [&](const MukaiVector& a) {
    if (square(cfg, a) == d && pairing(cfg, a, v) == m) {
      out.classes.push_back(a);
    }
  };

  const Integer a2 = square(cfg, k2);
  for (Integer i = -window; i <= window; ++i) {
    const MukaiVector base = a0 + k1 * i;
    const Integer b2 = pairing(cfg, base, k2);
    const Integer c2 = square(cfg, base) - d;
    if (a2 != 0) {
      const auto root = exact_sqrt(Integer(b2 * b2 - a2 * c2));
      if (!root) {
        continue;
      }
      for (const Integer& num : {Integer(-b2 + *root), Integer(-b2 - *root)}) {
        if (num % a2 == 0) {
          push(base + k2 * Integer(num / a2));
        }
      }
    } else if (b2 != 0) {
      if (c2 % (2 * b2) == 0) {
        push(base + k2 * Integer(-c2 / (2 * b2)));
      }
    } else if (c2 == 0) {
      out.fallback_scan = true;
      break;
    }
  }

  if (out.fallback_scan) {
    out.classes.clear();
    const Integer bound = std::min(window, Integer(40));
    for (Integer r = -bound; r <= bound; ++r) {
      for (Integer c = -bound; c <= bound; ++c) {
        for (Integer s = -bound; s <= bound; ++s) {
          push(MukaiVector(r, c, s));
        }
      }
    }
  }

  std::sort(out.classes.begin(), out.classes.end(), lex_less);
  out.classes.erase(std::unique(out.classes.begin(), out.classes.end()), out.classes.end());
  return out;
}

std::vector<LatticePoint2> classes_in_rank2(const GramForm2& form, const Integer& d,
                                            const Integer& pairing_with_v) {
  const Integer& a = form.q11;
  const Integer& b = form.q12;
  const Integer& m = pairing_with_v;
  if (a == 0) {
    throw std::invalid_argument("classes_in_rank2: v must have non-zero square");
  }
  const Integer disc = form.discriminant();
  std::vector<LatticePoint2> out;
  auto try_q = [&](const Integer& q) {
    const Integer num = m - b * q;
    if (num % a != 0) {
      return;
    }
    const Integer p = num / a;
    if (p == 0 && q == 0) {
      return;
    }
    if (form.value(p, q) == d && form.bilinear(p, q, 1, 0) == m) {
      out.emplace_back(p, q);
    }
  };
  // a * x^2 = (x, v)^2 + disc * q^2
  if (disc == 0) {
    if (a * d == m * m) {
      for (long q = -1; q <= 1; ++q) {
        try_q(Integer(q));
      }
    }
    return out;
  }
  const Integer numer = a * d - m * m;
  if (numer % disc != 0) {
    return out;
  }
  const auto root = exact_sqrt(Integer(numer / disc));
  if (!root) {
    return out;
  }
  try_q(*root);
  if (*root != 0) {
    try_q(Integer(-*root));
  }
  return out;
}

std::vector<LatticePoint2> lattice_points_in_parallelogram(const GramForm2& /*form*/,
                                                           const LatticePoint2& a,
                                                           const LatticePoint2& v) {
  const Integer b1 = v.first - a.first;
  const Integer b2 = v.second - a.second;
  const Integer det = a.first * b2 - a.second * b1;
  if (det == 0) {
    throw std::invalid_argument("lattice_points_in_parallelogram: a and v - a are dependent");
  }
  const Integer xs[] = {0, a.first, b1, v.first};
  const Integer ys[] = {0, a.second, b2, v.second};
  const Integer xlo = *std::min_element(std::begin(xs), std::end(xs));
  const Integer xhi = *std::max_element(std::begin(xs), std::end(xs));
  const Integer ylo = *std::min_element(std::begin(ys), std::end(ys));
  const Integer yhi = *std::max_element(std::begin(ys), std::end(ys));

  std::vector<LatticePoint2> out;
  for (Integer x = xlo; x <= xhi; ++x) {
    for (Integer y = ylo; y <= yhi; ++y) {
      const Rational lambda = ratio(x * b2 - y * b1, det);
      const Rational mu = ratio(a.first * y - a.second * x, det);
      if (lambda < 0 || lambda > 1 || mu < 0 || mu > 1) {
        continue;
      }
      const LatticePoint2 pt{x, y};
      if (pt == LatticePoint2{0, 0} || pt == a || pt == LatticePoint2{b1, b2} || pt == v) {
        continue;
      }
      out.push_back(pt);
    }
  }
  return out;
}

std::vector<DecompositionSolution> decomposition_solutions(const K3Config& cfg,
                                                           const MukaiVector& v,
                                                           const MukaiVector& a_i) {
  const GramForm2 form = gram_of(cfg, v, a_i);
  const Integer& big_a = form.q11;
  const Integer disc = form.discriminant();
  std::vector<DecompositionSolution> out;
  if (big_a <= 0 || disc >= 0) {
    return out;
  }
  for (Integer m = 1; 2 * m <= big_a; ++m) {
    // big_a * a^2 = m^2 + disc * x^2 >= -2 big_a bounds x
    const Integer bound_sq = floor_div(Integer(m * m + 2 * big_a), Integer(-disc));
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), bound_sq.get_mpz_t());
    for (Integer x = -bound; x <= bound; ++x) {
      const Integer num = m - form.q12 * x;
      if (num % big_a != 0) {
        continue;
      }
      const Integer y = num / big_a;
      const Integer sq = form.value(y, x);
      if (sq < 0 && sq != -2) {
        continue;
      }
      DecompositionSolution sol;
      sol.x = x;
      sol.y = y;
      sol.a = a_i * x + v * y;
      sol.b = v - sol.a;
      sol.a_square = sq;
      sol.a_pairing = m;
      sol.spherical = sq == -2;
      out.push_back(std::move(sol));
    }
  }
  return out;
}

}  // namespace mukai
