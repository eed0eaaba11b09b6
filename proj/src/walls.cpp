#include "mukai/walls.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mukai {

Integer default_window(const K3Config& cfg, const MukaiVector& v) {
  return 16 * square(cfg, v);
}

Rational ns_pairing(const K3Config& cfg, const NSBasis& basis, const Vec2<Rational>& x,
                    const Vec2<Rational>& y) {
  const Vec3<Rational> e1 = basis.e1.cast<Rational>(), e2 = basis.e2.cast<Rational>();
  return pairing<Rational>(cfg, e1 * x(0) + e2 * x(1), e1 * y(0) + e2 * y(1));
}

Vec2<Rational> ns_coordinates(const NSBasis& basis, const Vec3<Rational>& x) {
  Integer lcm = 1;
  for (int i = 0; i < 3; ++i) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x(i).get_den_mpz_t());
  }
  MukaiVector scaled;
  for (int i = 0; i < 3; ++i) {
    scaled(i) = Rational(x(i) * lcm).get_num();
  }
  auto c = coordinates_in(basis.e1, basis.e2, scaled);
  if (!c) {
    throw std::invalid_argument("ns_coordinates: class is not in v^perp");
  }
  return *c / Rational(lcm);
}

int orientation(const Vec2<Rational>& x, const Vec2<Rational>& y) {
  return sgn(Rational(x(0) * y(1) - x(1) * y(0)));
}

Vec2<Rational> wall_ray(const K3Config& cfg, const NSBasis& basis, const NSClass& d,
                        const Vec2<Rational>& reference) {
  const Vec2<Rational> dq(Rational(d.coords(0)), Rational(d.coords(1)));
  Vec2<Rational> ray;
  if (d.bbf_square == 0) {
    ray = dq;
  } else {
    // covector G d; its kernel is the wall
    const Rational g0 = ns_pairing(cfg, basis, dq, Vec2<Rational>(1, 0));
    const Rational g1 = ns_pairing(cfg, basis, dq, Vec2<Rational>(0, 1));
    ray = Vec2<Rational>(Rational(-g1), g0);
  }
  if (ns_pairing(cfg, basis, ray, reference) < 0) {
    ray = -ray;
  }
  return ray;
}

namespace {

std::string divisor_key(const NSClass& d) {
  Vec2<Integer> c = d.coords;
  if (c(0) < 0 || (c(0) == 0 && c(1) < 0)) {
    c = -c;
  }
  return c(0).get_str() + "," + c(1).get_str();
}

}  // namespace

std::vector<WallLattice> candidate_walls(const K3Config& cfg, const MukaiVector& v,
                                         const NSBasis& basis, const Integer& window) {
  const Integer v2 = square(cfg, v);
  std::map<std::string, WallLattice> found;
  // A hyperbolic or degenerate <v, a> with 0 <= (a, v) <= v^2/2 needs v^2 a^2 <= (a, v)^2.
  for (Integer d = -2; v2 * d * 4 <= v2 * v2; d += 2) {
    for (Integer m = 0; 2 * m <= v2; ++m) {
      if (v2 * d > m * m) {
        continue;
      }
      for (const auto& a : solve_square_with_pairing(cfg, v, d, m, window).classes) {
        if (proportional(a, v)) {
          continue;
        }
        WallLattice wall = make_wall_lattice(cfg, v, a, basis);
        found.try_emplace(divisor_key(wall.divisor), std::move(wall));
      }
    }
  }
  std::vector<WallLattice> out;
  for (auto& [key, wall] : found) {
    out.push_back(std::move(wall));
  }
  return out;
}

namespace {

struct Reference {
  Rational b;
  Rational t2;
  Vec2<Rational> ray;
};

Reference pick_reference(const K3Config& cfg, const MukaiVector& v, const NSBasis& basis,
                         const std::vector<WallLattice>& walls) {
  static const long numerators[] = {-1, 1, -2, 2, -3, 3, -5, 5};
  for (long den : {3L, 7L, 11L, 13L}) {
    for (long num : numerators) {
      const Rational b = ratio(Integer(num), Integer(den));
      const Rational t2(100);
      if (!in_geometric_region(cfg, b, t2)) {
        continue;
      }
      const Vec3<Rational> w = nef_direction(cfg, v, b, t2);
      Vec3<Integer> scaled;
      Integer lcm = 1;
      for (int i = 0; i < 3; ++i) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w(i).get_den_mpz_t());
      }
      for (int i = 0; i < 3; ++i) {
        scaled(i) = Rational(w(i) * lcm).get_num();
      }
      if (is_zero(scaled) || square(cfg, scaled) <= 0) {
        continue;
      }
      const NSClass c = to_ns(cfg, basis, scaled);
      const Vec2<Rational> ray(Rational(c.coords(0)), Rational(c.coords(1)));
      bool on_wall = false;
      for (const auto& wall : walls) {
        if (orientation(ray, wall_ray(cfg, basis, wall.divisor, ray)) == 0) {
          on_wall = true;
          break;
        }
      }
      if (!on_wall) {
        return {b, t2, ray};
      }
    }
  }
  throw std::runtime_error("no generic reference stability condition found");
}

bool bounds_movable(const WallLattice& wall) {
  if (wall.isotropic_boundary) {
    return true;
  }
  // divisorial: spherical orthogonal to v, or isotropic with (w, v) in {1, 2}
  return !classes_in_rank2(wall.gram, Integer(-2), Integer(0)).empty() ||
         !classes_in_rank2(wall.gram, Integer(0), Integer(1)).empty() ||
         !classes_in_rank2(wall.gram, Integer(0), Integer(2)).empty();
}

bool is_hilbert_chow(const WallLattice& wall) {
  return !wall.isotropic_boundary &&
         !classes_in_rank2(wall.gram, Integer(0), Integer(1)).empty();
}

WallEnumeration enumerate_once(const K3Config& cfg, const MukaiVector& v,
                               const EnumerationOptions& options, const Integer& window) {
  WallEnumeration out;
  out.basis = lambda_basis(cfg, v);
  out.window = window;
  const auto lattices = candidate_walls(cfg, v, out.basis, window);
  const Reference ref = pick_reference(cfg, v, out.basis, lattices);
  out.reference = ref.ray;
  out.reference_b = ref.b;
  out.reference_t2 = ref.t2;

  std::vector<PlacedWall> placed;
  for (const auto& lattice : lattices) {
    PlacedWall pw;
    pw.lattice = lattice;
    pw.ray = wall_ray(cfg, out.basis, lattice.divisor, ref.ray);
    pw.bounds_movable = bounds_movable(lattice);
    placed.push_back(std::move(pw));
  }
  auto before = [](const PlacedWall& x, const PlacedWall& y) {
    const int o = orientation(x.ray, y.ray);
    return o != 0 ? o > 0 : lex_less(x.lattice.a, y.lattice.a);
  };
  std::sort(placed.begin(), placed.end(), before);

  if (options.sector == Sector::PositiveWindow) {
    out.walls = std::move(placed);
    return out;
  }

  // Nearest boundary candidate on each side of the reference ray.
  std::optional<std::size_t> lower, upper;
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (!placed[i].bounds_movable) {
      continue;
    }
    if (orientation(placed[i].ray, ref.ray) > 0) {
      lower = i;
    } else if (!upper) {
      upper = i;
    }
  }
  out.lower_closed = lower.has_value();
  out.upper_closed = upper.has_value();
  if (!lower || !upper) {
    out.warnings.push_back("movable cone boundary not found within the scan window");
  }
  const std::size_t first = lower.value_or(0);
  const std::size_t last = upper ? *upper : (placed.empty() ? 0 : placed.size() - 1);
  for (std::size_t i = first; i < placed.size() && i <= last; ++i) {
    out.walls.push_back(placed[i]);
  }
  // Start from the Hilbert-Chow side, or from the divisorial side when the
  // other end is an isotropic boundary.
  if (out.walls.size() >= 2) {
    const auto& front = out.walls.front().lattice;
    const auto& back = out.walls.back().lattice;
    const bool flip = (is_hilbert_chow(back) && !is_hilbert_chow(front)) ||
                      (!is_hilbert_chow(front) && front.isotropic_boundary && !back.isotropic_boundary);
    if (flip) {
      std::reverse(out.walls.begin(), out.walls.end());
    }
  }
  return out;
}

bool same_walls(const WallEnumeration& x, const WallEnumeration& y) {
  if (x.walls.size() != y.walls.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.walls.size(); ++i) {
    if (divisor_key(x.walls[i].lattice.divisor) != divisor_key(y.walls[i].lattice.divisor)) {
      return false;
    }
  }
  return true;
}

}  // namespace

WallEnumeration enumerate_walls(const K3Config& cfg, const MukaiVector& v,
                                const EnumerationOptions& options) {
  if (is_zero(v) || !is_primitive(v)) {
    throw std::invalid_argument("enumerate_walls: v must be primitive and non-zero");
  }
  if (square(cfg, v) <= 0) {
    throw std::invalid_argument("enumerate_walls: v^2 must be positive");
  }
  const Integer window = options.window > 0 ? options.window : default_window(cfg, v);
  WallEnumeration out = enumerate_once(cfg, v, options, window);
  if (options.check_stability) {
    WallEnumeration doubled = enumerate_once(cfg, v, options, Integer(2 * window));
    if (!same_walls(out, doubled)) {
      doubled.stable = false;
      doubled.warnings.push_back("wall list changed when the scan window was doubled from " +
                                 to_string(window));
      return doubled;
    }
  }
  return out;
}

}  // namespace mukai
