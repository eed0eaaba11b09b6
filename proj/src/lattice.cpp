#include "mukai/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace mukai {

K3Config::K3Config(long genus) : genus_(genus) {
  if (genus < 2) {
    throw std::invalid_argument("genus must be at least 2");
  }
}

bool is_zero(const MukaiVector& x) { return x(0) == 0 && x(1) == 0 && x(2) == 0; }

Integer content(const MukaiVector& x) {
  return gcd_of(gcd_of(x(0), x(1)), x(2));
}

bool is_primitive(const MukaiVector& x) { return content(x) == 1; }

MukaiVector primitive_part(const MukaiVector& x) {
  const Integer g = content(x);
  if (g == 0) {
    throw std::invalid_argument("primitive_part of the zero vector");
  }
  return MukaiVector(Integer(x(0) / g), Integer(x(1) / g), Integer(x(2) / g));
}

bool proportional(const MukaiVector& x, const MukaiVector& y) {
  return x(0) * y(1) == x(1) * y(0) && x(0) * y(2) == x(2) * y(0) &&
         x(1) * y(2) == x(2) * y(1);
}

bool lex_less(const MukaiVector& x, const MukaiVector& y) {
  for (int i = 0; i < 3; ++i) {
    if (x(i) != y(i)) {
      return x(i) < y(i);
    }
  }
  return false;
}

Integer moduli_dim(const K3Config& cfg, const MukaiVector& v) {
  const Integer sq = square(cfg, v);
  if (sq < -2) {
    throw std::invalid_argument("moduli_dim: v^2 < -2 for " + to_string(v));
  }
  return sq + 2;
}

Integer hilbert_n(const K3Config& cfg, const MukaiVector& v) {
  const Integer sq = square(cfg, v);
  if (sq < 2) {
    throw std::invalid_argument("hilbert_n: v^2 must be at least 2, got " + to_string(sq));
  }
  return sq / 2 + 1;
}

MukaiVector line_bundle(const K3Config& cfg, const Integer& k) {
  return MukaiVector(Integer(1), k, Integer(k * k * cfg.h2() / 2 + 1));
}

MukaiVector tensor_by(const K3Config& cfg, const Integer& k, const MukaiVector& x) {
  // Product of (r, c, s) with ch(O(kH)) = (1, k, k^2 H^2/2); H^2 is even.
  const long h = cfg.h2();
  return MukaiVector(x(0), Integer(x(1) + k * x(0)),
                     Integer(x(2) + k * x(1) * h + k * k * (h / 2) * x(0)));
}

MukaiVector reflect_spherical(const K3Config& cfg, const MukaiVector& w, const MukaiVector& x) {
  if (square(cfg, w) != -2) {
    throw std::invalid_argument("reflect_spherical: w^2 must be -2, got " +
                                to_string(Integer(square(cfg, w))));
  }
  const Integer t = pairing(cfg, x, w);
  return x + w * t;
}

MukaiVector dual(const MukaiVector& x) { return MukaiVector(x(0), Integer(-x(1)), x(2)); }

namespace {

template <typename F>
IsometryMatrix matrix_of(F&& f) {
  IsometryMatrix m;
  for (int j = 0; j < 3; ++j) {
    MukaiVector e = MukaiVector::Zero();
    e(j) = 1;
    m.col(j) = f(e);
  }
  return m;
}

}  // namespace

Isometry Isometry::identity() { return Isometry{}; }

Isometry Isometry::tensor(const K3Config& cfg, const Integer& k) {
  Isometry iso;
  iso.kind = Kind::Tensor;
  iso.k = k;
  iso.matrix = matrix_of([&](const MukaiVector& e) { return tensor_by(cfg, k, e); });
  return iso;
}

Isometry Isometry::reflect(const K3Config& cfg, const MukaiVector& w) {
  Isometry iso;
  iso.kind = Kind::Reflect;
  iso.w = w;
  iso.matrix = matrix_of([&](const MukaiVector& e) { return reflect_spherical(cfg, w, e); });
  return iso;
}

Isometry Isometry::dual() {
  Isometry iso;
  iso.kind = Kind::Dual;
  iso.matrix = matrix_of([](const MukaiVector& e) { return mukai::dual(e); });
  return iso;
}

Isometry Isometry::compose(std::vector<Isometry> parts) {
  Isometry iso;
  iso.kind = Kind::Composite;
  for (const auto& p : parts) {
    iso.matrix = IsometryMatrix(p.matrix * iso.matrix);
  }
  iso.parts = std::move(parts);
  return iso;
}

Isometry Isometry::inverse() const {
  Isometry iso;
  iso.kind = Kind::Composite;
  iso.matrix = unimodular_inverse(matrix);
  return iso;
}

Integer Isometry::determinant() const { return mukai::determinant(matrix); }

std::string Isometry::describe() const {
  switch (kind) {
    case Kind::Identity:
      return "id";
    case Kind::Tensor:
      return "tensor(" + to_string(k) + ")";
    case Kind::Reflect:
      return "reflect(" + to_string(w) + ")";
    case Kind::Dual:
      return "dual";
    case Kind::Composite: {
      if (parts.empty()) {
        return "matrix";
      }
      std::string out;
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (!out.empty()) {
          out += " o ";
        }
        out += it->describe();
      }
      return out;
    }
  }
  return "?";
}

Isometry twist_T(const K3Config& cfg, const Integer& k) {
  return Isometry::compose(
      {Isometry::tensor(cfg, k), Isometry::reflect(cfg, line_bundle(cfg, k))});
}

Integer determinant(const IsometryMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

IsometryMatrix unimodular_inverse(const IsometryMatrix& m) {
  const Integer det = determinant(m);
  if (det != 1 && det != -1) {
    throw std::domain_error("matrix is not unimodular");
  }
  IsometryMatrix adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return adj * det;  // det = ±1, so 1/det = det
}

MukaiVector sign_normalized(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a) {
  return pairing(cfg, a, v) < 0 ? MukaiVector(-a) : a;
}

MukaiVector parse_vector(const std::string& text) {
  std::string body = text;
  const auto first = body.find_first_not_of(" \t");
  const auto last = body.find_last_not_of(" \t");
  if (first != std::string::npos && body[first] == '(' && body[last] == ')') {
    body = body.substr(first + 1, last - first - 1);
  }
  std::stringstream ss(body);
  std::string part;
  std::vector<Integer> values;
  while (std::getline(ss, part, ',')) {
    const auto b = part.find_first_not_of(" \t");
    const auto e = part.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw std::invalid_argument("empty component in vector '" + text + "'");
    }
    values.push_back(parse_integer(part.substr(b, e - b + 1)));
  }
  if (values.size() != 3) {
    throw std::invalid_argument("expected r,c,s but got '" + text + "'");
  }
  return MukaiVector(values[0], values[1], values[2]);
}

std::string to_string(const MukaiVector& x) {
  return "(" + x(0).get_str() + "," + x(1).get_str() + "," + x(2).get_str() + ")";
}

}  // namespace mukai
