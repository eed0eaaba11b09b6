#pragma once

// Typed reports behind the command-line tool and their table, JSON and CSV
// renderings. Exact values travel as canonical strings in JSON.

#include "mukai/chamber.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mukai {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string& text);

struct RunConfig {
  long genus = 2;
  MukaiVector v = MukaiVector::Zero();
  Integer scan_window = 0;  // 0: default 16 v^2
  std::optional<Rational> path_b;
  Rational t_min = 0;
  std::optional<Rational> t_max;
  OutputFormat output = OutputFormat::Table;
};

struct WallRow {
  long index = 0;
  MukaiVector a;
  Integer a_square;
  Integer a_pairing;
  std::string kind;    // divisorial, flopping, fake, lagrangian
  std::string detail;  // divisorial type or flop trigger
  bool boundary = false;
  Vec2<Integer> d_coords;
  std::string d_label;
  Integer q_d;
  Integer divisibility;
  std::string r_label;
  Rational q_r;
  std::optional<Integer> fiber_dim;
  bool totally_semistable = false;
  bool arc_dependent = false;
  std::string bundle;

  friend bool operator==(const WallRow&, const WallRow&) = default;
};

struct WallsReport {
  int schema_version = kSchemaVersion;
  long genus = 2;
  MukaiVector v;
  std::string basis_e1;  // "delta=(-1,0,-4)"
  std::string basis_e2;
  Integer window;
  bool stable = true;
  long chambers = 1;
  long interior_walls = 0;
  std::vector<std::string> warnings;
  std::vector<WallRow> rows;

  friend bool operator==(const WallsReport&, const WallsReport&) = default;
};

struct CrossingRow {
  Rational t2;
  long wall = 0;  // row index in the walls report
  MukaiVector a;
  std::optional<MukaiVector> hole;
  std::string above;  // chamber label just above the crossing
  std::string below;

  friend bool operator==(const CrossingRow&, const CrossingRow&) = default;
};

struct PathReport {
  int schema_version = kSchemaVersion;
  long genus = 2;
  MukaiVector v;
  Rational b;
  Rational t_min;
  std::optional<Rational> t_max;
  std::vector<CrossingRow> crossings;
  std::vector<std::pair<Rational, MukaiVector>> holes;  // (t^2, spherical)
  std::vector<std::string> warnings;

  friend bool operator==(const PathReport&, const PathReport&) = default;
};

WallsReport walls_report(const RunConfig& config);
WallsReport walls_report(const K3Config& cfg, const MukaiVector& v, const ChamberChain& chain);

/// Requires config.path_b.
PathReport path_report(const RunConfig& config);

/// "sqrt(2/3)", "2", "sqrt(2)": t for a given t^2.
std::string sqrt_string(const Rational& t2);
/// Decimal approximation of sqrt(t^2) with six digits.
std::string sqrt_decimal(const Rational& t2);

std::string render(const WallsReport& report, OutputFormat format);
std::string render(const PathReport& report, OutputFormat format);

/// Inverse of render(..., Json). Throws std::invalid_argument on malformed input.
WallsReport parse_walls_json(const std::string& text);
PathReport parse_path_json(const std::string& text);

}  // namespace mukai
