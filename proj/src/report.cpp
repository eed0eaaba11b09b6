#include "mukai/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mukai {

OutputFormat parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + text + "' (table, json, csv)");
}

namespace {

EnumerationOptions options_of(const RunConfig& config) {
  EnumerationOptions opts;
  opts.window = config.scan_window;
  return opts;
}

std::string detail_of(const WallVerdict& verdict) {
  if (verdict.divisorial) return to_string(*verdict.divisorial);
  if (verdict.trigger) return to_string(*verdict.trigger);
  return "";
}

// Chamber of the movable cone containing the ray x: "C0" is the chamber next
// to the first wall of the chain.
std::string chamber_label(const ChamberChain& chain, const Vec2<Rational>& x) {
  const auto& walls = chain.walls;
  if (walls.empty()) {
    return "C0";
  }
  const int dir = walls.size() >= 2 ? orientation(walls.front().wall.ray, walls.back().wall.ray) : 1;
  const int dir_sign = dir == 0 ? 1 : dir;
  long passed = 0;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const auto& e = walls[i];
    const int o = orientation(e.wall.ray, x) * dir_sign;
    if (o == 0) {
      return "W" + std::to_string(i);
    }
    if (e.boundary) {
      if ((i == 0 && o < 0) || (i + 1 == walls.size() && o > 0)) {
        return "outside";
      }
    } else if (e.verdict.kind == WallKind::Flopping && o > 0) {
      ++passed;
    }
  }
  return "C" + std::to_string(passed);
}

std::string label_at(const K3Config& cfg, const ChamberChain& chain, const MukaiVector& v,
                     const Rational& b, const Rational& t2) {
  return chamber_label(chain, ns_coordinates(chain.enumeration.basis, nef_direction(cfg, v, b, t2)));
}

}  // namespace

WallsReport walls_report(const K3Config& cfg, const MukaiVector& v, const ChamberChain& chain) {
  WallsReport r;
  const auto& en = chain.enumeration;
  r.genus = cfg.genus();
  r.v = v;
  r.basis_e1 = en.basis.label1 + "=" + to_string(en.basis.e1);
  r.basis_e2 = en.basis.label2 + "=" + to_string(en.basis.e2);
  r.window = en.window;
  r.stable = en.stable;
  r.chambers = static_cast<long>(chain.chambers);
  r.interior_walls = static_cast<long>(chain.interior_walls);
  r.warnings = en.warnings;
  for (std::size_t i = 0; i < chain.walls.size(); ++i) {
    const auto& e = chain.walls[i];
    const auto& l = e.wall.lattice;
    WallRow row;
    row.index = static_cast<long>(i);
    row.a = l.representative;
    row.a_square = square(cfg, l.representative);
    row.a_pairing = pairing(cfg, l.representative, v);
    row.kind = to_string(e.verdict.kind);
    row.detail = detail_of(e.verdict);
    row.boundary = e.boundary;
    row.d_coords = l.divisor.coords;
    row.d_label = format_divisor(en.basis, l.divisor);
    row.q_d = l.divisor.bbf_square;
    row.divisibility = e.curve.divisibility;
    row.r_label = format_curve(en.basis, e.curve);
    row.q_r = e.curve.bbf_square;
    if (e.bundle) {
      row.fiber_dim = e.bundle->fiber_dim;
      row.bundle = e.bundle->describe();
    }
    row.totally_semistable = e.verdict.totally_semistable;
    row.arc_dependent = e.verdict.arc_dependent;
    r.rows.push_back(std::move(row));
  }
  return r;
}

WallsReport walls_report(const RunConfig& config) {
  const K3Config cfg(config.genus);
  return walls_report(cfg, config.v, chamber_chain(cfg, config.v, options_of(config)));
}

PathReport path_report(const RunConfig& config) {
  if (!config.path_b) {
    throw std::invalid_argument("path report needs a b value");
  }
  const K3Config cfg(config.genus);
  const ChamberChain chain = chamber_chain(cfg, config.v, options_of(config));
  PathReport r;
  r.genus = config.genus;
  r.v = config.v;
  r.b = *config.path_b;
  r.t_min = config.t_min;
  r.t_max = config.t_max;
  r.warnings = chain.enumeration.warnings;

  std::vector<MukaiVector> as;
  for (const auto& e : chain.walls) {
    as.push_back(e.wall.lattice.a);
  }
  const PathResult path = path_crossings(cfg, config.v, as, r.b, r.t_min, r.t_max);
  for (std::size_t i = 0; i < path.crossings.size(); ++i) {
    const auto& c = path.crossings[i];
    CrossingRow row;
    row.t2 = c.t2;
    row.wall = static_cast<long>(c.wall_index);
    row.a = chain.walls[c.wall_index].wall.lattice.representative;
    row.hole = c.hole_collision;
    const Rational upper = i == 0 ? (r.t_max ? Rational((*r.t_max + c.t2) / 2) : Rational(2 * c.t2 + 1))
                                  : Rational((path.crossings[i - 1].t2 + c.t2) / 2);
    const Rational lower = i + 1 < path.crossings.size()
                               ? Rational((path.crossings[i + 1].t2 + c.t2) / 2)
                               : Rational((r.t_min + c.t2) / 2);
    row.above = label_at(cfg, chain, config.v, r.b, upper);
    row.below = label_at(cfg, chain, config.v, r.b, lower);
    if (row.hole) {
      r.warnings.push_back("crossing at t^2=" + to_string(c.t2) + " meets the hole of " +
                           to_string(*row.hole));
    }
    r.crossings.push_back(std::move(row));
  }
  for (const auto& h : path.holes) {
    r.holes.emplace_back(h.t2, h.spherical);
    r.warnings.push_back("path passes through the hole of " + to_string(h.spherical) +
                         " at t^2=" + to_string(h.t2));
  }
  for (std::size_t idx : path.walls_containing_path) {
    r.warnings.push_back("path runs inside the wall of " + to_string(as[idx]));
  }
  return r;
}

std::string sqrt_string(const Rational& t2) {
  if (auto root = exact_sqrt(t2)) {
    return to_string(*root);
  }
  return "sqrt(" + to_string(t2) + ")";
}

std::string sqrt_decimal(const Rational& t2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", std::sqrt(t2.get_d()));
  return buf;
}

}  // namespace mukai
