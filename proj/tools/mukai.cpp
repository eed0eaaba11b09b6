// mukai: walls, chambers and wall-crossing data for moduli on a K3 surface.

#include "mukai/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>

using namespace mukai;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 1;
constexpr int kStabilityError = 2;

struct Args {
  long genus = 2;
  std::string v;
  std::string a;
  std::string b;
  std::string t_min;
  std::string t_max;
  std::string window;
  std::string format = "table";
  bool matrix = false;
  bool strict = false;
  bool tstar = false;
  bool dual = false;
  std::vector<std::string> tensor;
  std::vector<std::string> reflect;
};

MukaiVector require_vector(const std::string& text, const char* flag) {
  if (text.empty()) {
    throw std::invalid_argument(std::string(flag) + " is required");
  }
  return parse_vector(text);
}

RunConfig run_config(const Args& args) {
  RunConfig rc;
  rc.genus = args.genus;
  K3Config check(rc.genus);
  rc.v = require_vector(args.v, "--v");
  if (is_zero(rc.v)) {
    throw std::invalid_argument("--v must be non-zero");
  }
  if (!args.window.empty()) {
    rc.scan_window = parse_integer(args.window);
    if (rc.scan_window < default_window(check, rc.v)) {
      throw std::invalid_argument("--window must be at least 16 v^2 = " +
                                  to_string(default_window(check, rc.v)));
    }
  }
  if (!args.b.empty()) rc.path_b = parse_rational(args.b);
  if (!args.t_min.empty()) {
    const Rational t = parse_rational(args.t_min);
    if (t < 0) throw std::invalid_argument("--t-min must be non-negative");
    rc.t_min = t * t;
  }
  if (!args.t_max.empty()) {
    const Rational t = parse_rational(args.t_max);
    if (t <= 0) throw std::invalid_argument("--t-max must be positive");
    rc.t_max = t * t;
  }
  rc.output = parse_format(args.format);
  return rc;
}

std::string matrix_string(const IsometryMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < 3; ++j) {
      s += (j ? "," : "") + to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

std::string plain(const MukaiVector& x) {
  return to_string(x(0)) + "," + to_string(x(1)) + "," + to_string(x(2));
}

int report_warnings(const std::vector<std::string>& warnings, bool unstable, const Args& args,
                    OutputFormat format) {
  if (format != OutputFormat::Table) {
    for (const auto& w : warnings) {
      std::cerr << "warning: " << w << "\n";
    }
  }
  return unstable && args.strict ? kStabilityError : 0;
}

int cmd_walls(const Args& args) {
  const RunConfig rc = run_config(args);
  const WallsReport r = walls_report(rc);
  std::cout << render(r, rc.output);
  const bool unstable = !r.stable || !r.warnings.empty();
  return report_warnings(r.warnings, unstable, args, rc.output);
}

int cmd_path(const Args& args) {
  const RunConfig rc = run_config(args);
  if (!rc.path_b) {
    throw std::invalid_argument("path needs --b");
  }
  const PathReport r = path_report(rc);
  std::cout << render(r, rc.output);
  return report_warnings(r.warnings, !r.warnings.empty(), args, rc.output);
}

int cmd_transform(const Args& args, const CLI::App& app) {
  const K3Config cfg(args.genus);
  std::vector<Isometry> ops;
  std::map<std::string, std::size_t> used;
  for (const CLI::Option* opt : app.parse_order()) {
    const std::string name = opt->get_name();
    if (name == "--tstar") {
      ops.push_back(twist_T(cfg));
    } else if (name == "--dual") {
      ops.push_back(Isometry::dual());
    } else if (name == "--tensor") {
      ops.push_back(Isometry::tensor(cfg, parse_integer(args.tensor.at(used[name]++))));
    } else if (name == "--reflect") {
      ops.push_back(Isometry::reflect(cfg, parse_vector(args.reflect.at(used[name]++))));
    }
  }
  const Isometry phi = Isometry::compose(ops);
  const OutputFormat format = parse_format(args.format);
  const bool has_v = !args.v.empty();
  if (!has_v && !args.matrix) {
    throw std::invalid_argument("transform needs --v or --matrix");
  }
  if (format == OutputFormat::Json) {
    Json j{{"schema_version", kSchemaVersion}, {"command", "transform"}, {"genus", args.genus},
           {"isometry", phi.describe()}};
    if (has_v) {
      const MukaiVector v = parse_vector(args.v);
      j["v"] = to_string(v);
      j["image"] = to_string(phi(v));
    }
    if (args.matrix) j["matrix"] = matrix_string(phi.matrix);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (has_v) {
    std::cout << plain(phi(parse_vector(args.v))) << "\n";
  }
  if (args.matrix) {
    std::cout << matrix_string(phi.matrix) << "\n";
  }
  return 0;
}

int cmd_pairing(const Args& args) {
  const K3Config cfg(args.genus);
  const MukaiVector v = require_vector(args.v, "--v");
  const MukaiVector a = args.a.empty() ? v : parse_vector(args.a);
  const Integer va = pairing(cfg, v, a), v2 = square(cfg, v), a2 = square(cfg, a);
  if (parse_format(args.format) == OutputFormat::Json) {
    Json j{{"schema_version", kSchemaVersion}, {"command", "pairing"}, {"genus", args.genus},
           {"v", to_string(v)}, {"a", to_string(a)}, {"pairing", to_string(va)},
           {"v_square", to_string(v2)}, {"a_square", to_string(a2)}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "(v,a) = " << to_string(va) << "\n"
            << "v^2 = " << to_string(v2) << "\n"
            << "a^2 = " << to_string(a2) << "\n";
  if (v2 >= -2) {
    std::cout << "dim M(v) = " << to_string(moduli_dim(cfg, v)) << "\n";
  }
  return 0;
}

int cmd_classify(const Args& args) {
  const K3Config cfg(args.genus);
  const MukaiVector v = require_vector(args.v, "--v");
  const MukaiVector a = require_vector(args.a, "--a");
  if (!is_primitive(v) || square(cfg, v) <= 0) {
    throw std::invalid_argument("--v must be primitive with v^2 > 0");
  }
  const NSBasis basis = lambda_basis(cfg, v);
  const WallLattice wall = make_wall_lattice(cfg, v, a, basis);
  const WallVerdict verdict = classify(cfg, wall);
  const CurveClass curve = curve_class(cfg, v, basis, wall.divisor);
  std::vector<Decomposition> decompositions;
  if (verdict.phi && wall.gram.discriminant() < 0) {
    auto search = effective_decompositions(cfg, wall, *verdict.phi);
    decompositions = std::move(search.found);
    if (search.truncated) {
      std::cerr << "warning: decomposition search stopped at its limits\n";
    }
  }
  std::optional<BundleDescriptor> bundle;
  if (verdict.kind == WallKind::Flopping && pairing(cfg, MukaiVector(v - wall.a), wall.a) >= 2) {
    bundle = bundle_descriptor(cfg, v, wall.a);
  }
  auto parts = [](const Decomposition& d) {
    std::string s;
    for (const auto& p : d.parts) s += (s.empty() ? "" : " + ") + to_string(p);
    return s + (d.refinable ? "  (refinable)" : "");
  };
  if (parse_format(args.format) == OutputFormat::Json) {
    Json j{{"schema_version", kSchemaVersion}, {"command", "classify"}, {"genus", args.genus},
           {"v", to_string(v)}, {"a", to_string(wall.a)},
           {"gram", {to_string(wall.gram.q11), to_string(wall.gram.q12), to_string(wall.gram.q22)}},
           {"kind", to_string(verdict.kind)},
           {"detail", verdict.divisorial ? to_string(*verdict.divisorial)
                      : verdict.trigger  ? to_string(*verdict.trigger)
                                         : ""},
           {"totally_semistable", verdict.totally_semistable},
           {"arc_dependent", verdict.arc_dependent},
           {"D", format_divisor(basis, wall.divisor)}, {"q_D", to_string(wall.divisor.bbf_square)},
           {"divisibility", to_string(curve.divisibility)}, {"R", format_curve(basis, curve)},
           {"q_R", to_string(curve.bbf_square)},
           {"bundle", bundle ? bundle->describe() : ""}};
    j["certificates"] = Json::array();
    for (const auto& c : verdict.certificates) {
      j["certificates"].push_back({{"class", to_string(c.cls)}, {"role", to_string(c.role)}});
    }
    j["decompositions"] = Json::array();
    for (const auto& d : decompositions) j["decompositions"].push_back(parts(d));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "wall lattice <" << to_string(v) << ", " << to_string(wall.a) << ">  gram ["
            << to_string(wall.gram.q11) << " " << to_string(wall.gram.q12) << "; "
            << to_string(wall.gram.q12) << " " << to_string(wall.gram.q22) << "]\n";
  std::cout << "kind: " << to_string(verdict.kind);
  if (verdict.divisorial) std::cout << " (" << to_string(*verdict.divisorial) << ")";
  if (verdict.trigger) std::cout << " (" << to_string(*verdict.trigger) << ")";
  std::cout << "\ntotally semistable: " << (verdict.totally_semistable ? "yes" : "no")
            << (verdict.arc_dependent ? " (differs between arcs of the wall)" : "") << "\n";
  if (verdict.phi) {
    std::cout << "evaluated at b=" << to_string(verdict.phi->b) << " t^2=" << to_string(verdict.phi->t2)
              << "  phi(a)=" << to_string(verdict.phi->phi_a) << "\n";
  }
  std::cout << "D = " << format_divisor(basis, wall.divisor) << "  q(D) = "
            << to_string(wall.divisor.bbf_square) << "  div = " << to_string(curve.divisibility)
            << "  R = " << format_curve(basis, curve) << "  q(R) = " << to_string(curve.bbf_square) << "\n";
  for (const auto& c : verdict.certificates) {
    std::cout << "certificate " << to_string(c.cls) << ": " << to_string(c.role) << "\n";
  }
  for (const auto& d : decompositions) {
    std::cout << "v = " << parts(d) << "\n";
  }
  if (bundle) std::cout << "flopped locus: " << bundle->describe() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walls, chambers and wall crossings for moduli of objects on a K3 surface"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file; command-line flags win");
  Args args;
  app.add_option("--genus", args.genus, "genus g of the polarization, H^2 = 2g-2")->capture_default_str();
  app.add_option("--v", args.v, "Mukai vector r,c,s");
  app.add_option("--a", args.a, "second class r,c,s (classify, pairing)");
  app.add_option("--b", args.b, "b of the vertical path (path)");
  app.add_option("--t-min", args.t_min, "lower end of the open t range (path)");
  app.add_option("--t-max", args.t_max, "upper end of the open t range (path)");
  app.add_option("--window", args.window, "scan window, at least 16 v^2");
  app.add_option("--format", args.format, "table, json or csv")->capture_default_str();
  app.add_flag("--matrix", args.matrix, "print the composite matrix (transform)");
  app.add_flag("--strict", args.strict, "exit 2 on warnings or an unstable enumeration");
  app.add_flag("--tstar", args.tstar, "apply T* (transform)");
  app.add_flag("--dual", args.dual, "apply the derived dual (transform)");
  app.add_option("--tensor", args.tensor, "tensor by O(kH) (transform, repeatable)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->expected(1);
  app.add_option("--reflect", args.reflect, "reflect in a spherical class r,c,s (transform, repeatable)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->expected(1);

  std::map<std::string, CLI::App*> sub;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"walls", "list the walls of the movable cone with their verdicts"},
           {"path", "crossings of the vertical path b = const"},
           {"transform", "apply lattice isometries in command-line order"},
           {"classify", "classify the wall of the lattice <v, a>"},
           {"pairing", "Mukai pairing and squares"}}) {
    sub[name] = app.add_subcommand(name, help)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  try {
    if (sub["walls"]->parsed()) return cmd_walls(args);
    if (sub["path"]->parsed()) return cmd_path(args);
    if (sub["transform"]->parsed()) return cmd_transform(args, app);
    if (sub["classify"]->parsed()) return cmd_classify(args);
    if (sub["pairing"]->parsed()) return cmd_pairing(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
