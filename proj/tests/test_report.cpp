#include "support.hpp"
#include "mukai/report.hpp"

#include <doctest.h>

using namespace mukai;
using namespace mukai::test;

namespace {

RunConfig config(long g, const MukaiVector& v) {
  RunConfig rc;
  rc.genus = g;
  rc.v = v;
  return rc;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("sqrt strings") {
  CHECK(sqrt_string(q(4)) == "2");
  CHECK(sqrt_string(q(2)) == "sqrt(2)");
  CHECK(sqrt_string(q(2, 3)) == "sqrt(2/3)");
  CHECK(sqrt_string(q(9, 4)) == "3/2");
  CHECK(sqrt_decimal(q(3, 2)) == "1.224745");
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("table") == OutputFormat::Table);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("walls report rows for v'") {
  const WallsReport r = walls_report(config(2, mv(1, 0, -4)));
  REQUIRE(r.rows.size() == 6);
  CHECK(r.chambers == 5);
  CHECK(r.basis_e1 == "δ=(-1,0,-4)");
  CHECK(r.rows[1].d_label == "4H-3δ");
  CHECK(r.rows[1].r_label == "H-6δ^∨");
  CHECK(r.rows[1].q_r == q(-5, 2));
  CHECK(r.rows[1].fiber_dim == Integer(3));
  CHECK(r.rows[5].kind == "lagrangian");
}

TEST_CASE("JSON round trip") {
  for (const auto& v : {mv(1, 0, -4), mv(0, 2, -1), mv(1, 0, -1)}) {
    const WallsReport r = walls_report(config(2, v));
    const std::string text = render(r, OutputFormat::Json);
    CHECK(text.find("\"schema_version\": 1") != std::string::npos);
    const WallsReport back = parse_walls_json(text);
    CHECK(back == r);
    CHECK(render(back, OutputFormat::Json) == text);
  }
  RunConfig rc = config(2, mv(1, 0, -4));
  rc.path_b = q(-2);
  const PathReport p = path_report(rc);
  const PathReport back = parse_path_json(render(p, OutputFormat::Json));
  CHECK(back == p);
  rc.t_max = q(9);
  rc.t_min = q(1, 4);
  const PathReport bounded = path_report(rc);
  CHECK(parse_path_json(render(bounded, OutputFormat::Json)) == bounded);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(parse_walls_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_walls_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_walls_json(R"({"schema_version": 99, "command": "walls"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path_json(R"({"schema_version": 1, "command": "walls"})"), std::invalid_argument);
}

TEST_CASE("path report labels chambers and flags the hole") {
  RunConfig rc = config(2, mv(1, 0, -4));
  rc.path_b = q(-2);
  const PathReport p = path_report(rc);
  REQUIRE(p.crossings.size() == 4);
  CHECK(p.crossings[0].above == "C0");
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(p.crossings[i].below == "C" + std::to_string(i + 1));
  }
  CHECK(p.crossings[2].hole == mv(1, -2, 5));
  CHECK_FALSE(p.warnings.empty());

  // b at a hole's coordinate, but the range stops above it
  rc.t_min = q(2);
  const PathReport clean = path_report(rc);
  CHECK(clean.warnings.empty());
  CHECK(clean.crossings.size() == 1);
}

TEST_CASE("CSV columns follow the table") {
  const WallsReport r = walls_report(config(2, mv(1, 0, -4)));
  const std::string csv = render(r, OutputFormat::Csv);
  CHECK(csv.rfind("i,a,a^2,\"(a,v)\",kind,detail,mov,D,q(D),div,R,q(R),r,ts,bundle\n", 0) == 0);
  CHECK(csv.find("1,\"(1,-1,2)\",-2,2,flopping,spherical,interior,4H-3δ,-40,4,H-6δ^∨,-5/2,3,") !=
        std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  const WallsReport r = walls_report(config(2, mv(0, 2, -1)));
  CHECK(render(r, OutputFormat::Table) == render(walls_report(config(2, mv(0, 2, -1))), OutputFormat::Table));
}

}
