#include "mukai/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mukai {

using Json = nlohmann::ordered_json;

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s) {
    n += (ch & 0xC0) != 0x80;
  }
  return n;
}

std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) {
    width[j] = display_width(header[j]);
    for (const auto& row : rows) {
      width[j] = std::max(width[j], display_width(row[j]));
    }
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      text += cells[j];
      if (j + 1 < cells.size()) {
        text += std::string(width[j] - display_width(cells[j]) + 2, ' ');
      }
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& row : rows) {
    line(row);
  }
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (char ch : s) {
    quoted += ch;
    if (ch == '"') quoted += '"';
  }
  return quoted + "\"";
}

std::string format_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      out << (j ? "," : "") << csv_field(cells[j]);
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) {
    line(row);
  }
  return out.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string range_string(const Rational& lo, const std::optional<Rational>& hi) {
  return "(" + to_string(lo) + ", " + (hi ? to_string(*hi) : std::string("inf")) + ")";
}

const std::vector<std::string> kWallHeader = {"i",   "a",   "a^2", "(a,v)", "kind", "detail", "mov",
                                              "D",   "q(D)", "div", "R",     "q(R)", "r",      "ts",
                                              "bundle"};

std::vector<std::vector<std::string>> wall_cells(const WallsReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& w : r.rows) {
    rows.push_back({std::to_string(w.index), to_string(w.a), to_string(w.a_square),
                    to_string(w.a_pairing), w.kind, w.detail.empty() ? "-" : w.detail,
                    w.boundary ? "boundary" : "interior", w.d_label, to_string(w.q_d),
                    to_string(w.divisibility), w.r_label, to_string(w.q_r),
                    w.fiber_dim ? to_string(*w.fiber_dim) : "-",
                    yes_no(w.totally_semistable) + (w.arc_dependent ? "*" : ""),
                    w.bundle.empty() ? "-" : w.bundle});
  }
  return rows;
}

const std::vector<std::string> kPathHeader = {"t^2", "t", "t~", "wall", "a", "above", "below", "hole"};

std::vector<std::vector<std::string>> path_cells(const PathReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.crossings) {
    rows.push_back({to_string(c.t2), sqrt_string(c.t2), sqrt_decimal(c.t2), std::to_string(c.wall),
                    to_string(c.a), c.above, c.below, c.hole ? to_string(*c.hole) : "-"});
  }
  return rows;
}

Json to_json(const WallsReport& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["command"] = "walls";
  j["genus"] = r.genus;
  j["v"] = to_string(r.v);
  j["basis"] = {{"e1", r.basis_e1}, {"e2", r.basis_e2}};
  j["window"] = to_string(r.window);
  j["stable"] = r.stable;
  j["chambers"] = r.chambers;
  j["interior_walls"] = r.interior_walls;
  j["warnings"] = r.warnings;
  j["walls"] = Json::array();
  for (const auto& w : r.rows) {
    Json row;
    row["index"] = w.index;
    row["a"] = to_string(w.a);
    row["a_square"] = to_string(w.a_square);
    row["a_pairing"] = to_string(w.a_pairing);
    row["kind"] = w.kind;
    row["detail"] = w.detail;
    row["boundary"] = w.boundary;
    row["D"] = {{"coords", {to_string(w.d_coords(0)), to_string(w.d_coords(1))}}, {"label", w.d_label}};
    row["q_D"] = to_string(w.q_d);
    row["divisibility"] = to_string(w.divisibility);
    row["R"] = w.r_label;
    row["q_R"] = to_string(w.q_r);
    row["fiber_dim"] = w.fiber_dim ? Json(to_string(*w.fiber_dim)) : Json(nullptr);
    row["totally_semistable"] = w.totally_semistable;
    row["arc_dependent"] = w.arc_dependent;
    row["bundle"] = w.bundle;
    j["walls"].push_back(std::move(row));
  }
  return j;
}

Json to_json(const PathReport& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["command"] = "path";
  j["genus"] = r.genus;
  j["v"] = to_string(r.v);
  j["b"] = to_string(r.b);
  j["t2_min"] = to_string(r.t_min);
  j["t2_max"] = r.t_max ? Json(to_string(*r.t_max)) : Json(nullptr);
  j["crossings"] = Json::array();
  for (const auto& c : r.crossings) {
    j["crossings"].push_back({{"t2", to_string(c.t2)},
                              {"t", sqrt_string(c.t2)},
                              {"t_approx", sqrt_decimal(c.t2)},
                              {"wall", c.wall},
                              {"a", to_string(c.a)},
                              {"above", c.above},
                              {"below", c.below},
                              {"hole", c.hole ? Json(to_string(*c.hole)) : Json(nullptr)}});
  }
  j["holes"] = Json::array();
  for (const auto& [t2, s] : r.holes) {
    j["holes"].push_back({{"t2", to_string(t2)}, {"spherical", to_string(s)}});
  }
  j["warnings"] = r.warnings;
  return j;
}

void check_schema(const Json& j, const char* command) {
  if (!j.is_object() || j.value("schema_version", 0) != kSchemaVersion ||
      j.value("command", std::string()) != command) {
    throw std::invalid_argument(std::string("not a version ") + std::to_string(kSchemaVersion) +
                                " '" + command + "' document");
  }
}

}  // namespace

std::string render(const WallsReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return to_json(r).dump(2) + "\n";
    case OutputFormat::Csv: return format_csv(kWallHeader, wall_cells(r));
    case OutputFormat::Table: break;
  }
  std::ostringstream out;
  out << "genus " << r.genus << "  v=" << to_string(r.v) << "  basis " << r.basis_e1 << ", "
      << r.basis_e2 << "\n";
  out << "window " << to_string(r.window) << "  stable " << yes_no(r.stable) << "  chambers "
      << r.chambers << "  interior walls " << r.interior_walls << "\n\n";
  out << format_table(kWallHeader, wall_cells(r));
  if (std::any_of(r.rows.begin(), r.rows.end(), [](const WallRow& w) { return w.arc_dependent; })) {
    out << "* the verdict differs between arcs of the wall separated by holes\n";
  }
  for (const auto& w : r.warnings) {
    out << "warning: " << w << "\n";
  }
  return out.str();
}

std::string render(const PathReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return to_json(r).dump(2) + "\n";
    case OutputFormat::Csv: return format_csv(kPathHeader, path_cells(r));
    case OutputFormat::Table: break;
  }
  std::ostringstream out;
  out << "genus " << r.genus << "  v=" << to_string(r.v) << "  b=" << to_string(r.b) << "  t^2 in "
      << range_string(r.t_min, r.t_max) << "\n\n";
  out << format_table(kPathHeader, path_cells(r));
  for (const auto& w : r.warnings) {
    out << "warning: " << w << "\n";
  }
  return out.str();
}

WallsReport parse_walls_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    check_schema(j, "walls");
    WallsReport r;
    r.schema_version = j.at("schema_version");
    r.genus = j.at("genus");
    r.v = parse_vector(j.at("v").get<std::string>());
    r.basis_e1 = j.at("basis").at("e1");
    r.basis_e2 = j.at("basis").at("e2");
    r.window = parse_integer(j.at("window"));
    r.stable = j.at("stable");
    r.chambers = j.at("chambers");
    r.interior_walls = j.at("interior_walls");
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& row : j.at("walls")) {
      WallRow w;
      w.index = row.at("index");
      w.a = parse_vector(row.at("a"));
      w.a_square = parse_integer(row.at("a_square"));
      w.a_pairing = parse_integer(row.at("a_pairing"));
      w.kind = row.at("kind");
      w.detail = row.at("detail");
      w.boundary = row.at("boundary");
      const auto& coords = row.at("D").at("coords");
      w.d_coords = Vec2<Integer>(parse_integer(coords.at(0)), parse_integer(coords.at(1)));
      w.d_label = row.at("D").at("label");
      w.q_d = parse_integer(row.at("q_D"));
      w.divisibility = parse_integer(row.at("divisibility"));
      w.r_label = row.at("R");
      w.q_r = parse_rational(row.at("q_R"));
      if (!row.at("fiber_dim").is_null()) {
        w.fiber_dim = parse_integer(row.at("fiber_dim"));
      }
      w.totally_semistable = row.at("totally_semistable");
      w.arc_dependent = row.at("arc_dependent");
      w.bundle = row.at("bundle");
      r.rows.push_back(std::move(w));
    }
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed walls document: ") + e.what());
  }
}

PathReport parse_path_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    check_schema(j, "path");
    PathReport r;
    r.schema_version = j.at("schema_version");
    r.genus = j.at("genus");
    r.v = parse_vector(j.at("v"));
    r.b = parse_rational(j.at("b"));
    r.t_min = parse_rational(j.at("t2_min"));
    if (!j.at("t2_max").is_null()) {
      r.t_max = parse_rational(j.at("t2_max"));
    }
    for (const auto& c : j.at("crossings")) {
      CrossingRow row;
      row.t2 = parse_rational(c.at("t2"));
      row.wall = c.at("wall");
      row.a = parse_vector(c.at("a"));
      row.above = c.at("above");
      row.below = c.at("below");
      if (!c.at("hole").is_null()) {
        row.hole = parse_vector(c.at("hole"));
      }
      r.crossings.push_back(std::move(row));
    }
    for (const auto& h : j.at("holes")) {
      r.holes.emplace_back(parse_rational(h.at("t2")), parse_vector(h.at("spherical")));
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed path document: ") + e.what());
  }
}

}  // namespace mukai
