#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cuspforge/config.hpp"
#include "cuspforge/io.hpp"
#include "doctest.h"

using namespace cuspforge;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("csv output is deterministic full-precision text") {
  CsvWriter csv({"a", "b"});
  csv.add_row({1.5, 2.0});
  csv.add_row({0.1, -3.25});
  CHECK(csv.str() == "a,b\n1.5,2\n0.10000000000000001,-3.25\n");
  CHECK(CsvWriter::format_double(0.1) == "0.10000000000000001");
  CHECK(CsvWriter::format_double(2.0) == "2");
  CHECK(csv.str().find('\r') == std::string::npos);

  fs::path p = fs::temp_directory_path() / "cuspforge_csv_test.csv";
  csv.write_file(p.string());
  CHECK(slurp(p) == csv.str());

  CsvWriter again({"a", "b"});
  again.add_row({1.5, 2.0});
  again.add_row({0.1, -3.25});
  CHECK(again.str() == csv.str());
}

TEST_CASE("csv text rows pass through verbatim") {
  CsvWriter csv({"name", "verdict"});
  csv.add_text_row({"volume", "convergent"});
  CHECK(csv.str() == "name,verdict\nvolume,convergent\n");
}

TEST_CASE("svg charts are self-contained and reproducible") {
  SvgChart chart("curvature", "t", "K");
  chart.add_series("radial", {{0.0, -1.0}, {1.0, -2.0}, {2.0, -5.0}});
  chart.add_series("tangential", {{0.0, -1.0}, {2.0, -9.0}});
  std::string svg = chart.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("800") != std::string::npos);
  CHECK(svg.find("radial") != std::string::npos);
  CHECK(svg.find("tangential") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("curvature") != std::string::npos);

  SvgChart chart2("curvature", "t", "K");
  chart2.add_series("radial", {{0.0, -1.0}, {1.0, -2.0}, {2.0, -5.0}});
  chart2.add_series("tangential", {{0.0, -1.0}, {2.0, -9.0}});
  CHECK(chart2.str() == svg);

  fs::path p = fs::temp_directory_path() / "cuspforge_svg_test.svg";
  chart.write_file(p.string());
  CHECK(slurp(p) == svg);
}

TEST_CASE("config parsing handles sections, comments, and defaults") {
  std::string text =
      "# cusp experiment\n"
      "[cusp]\n"
      "profile = exp  # decaying tail\n"
      "n = 3\n"
      "\n"
      "rate = 2.5\n";
  ParseResult r = parse_config(text, "cusp");
  REQUIRE(r.ok());
  CHECK(r.config.subcommand == "cusp");
  CHECK(r.config.get("profile", "") == "exp");
  CHECK(r.config.get_int("n", 0) == 3);
  CHECK(r.config.get_num("rate", 0.0) == 2.5);
  // unset keys are filled from the schema defaults
  CHECK(r.config.has("tol"));
  CHECK(r.config.get_num("amplitude", -1.0) == 1.0);
}

TEST_CASE("all problems are collected in one pass") {
  std::string text =
      "bogus_key = 3\n"
      "tol = 5\n"
      "n = 3\n"
      "n = 4\n"
      "this line has no equals\n";
  ParseResult r = parse_config(text, "cusp");
  CHECK(r.issues.size() == 4);
  bool saw_unknown = false, saw_tol = false, saw_dup = false, saw_parse = false;
  for (const auto& i : r.issues) {
    std::string msg = i.render();
    CHECK(!msg.empty());
    if (i.field == "bogus_key") saw_unknown = true;
    if (i.field == "tol") saw_tol = true;
    if (i.message.find("duplicate") != std::string::npos) saw_dup = true;
    if (i.kind == ConfigIssue::Kind::Parse) {
      saw_parse = true;
      CHECK(i.line == 5);
    }
  }
  CHECK(saw_unknown);
  CHECK(saw_tol);
  CHECK(saw_dup);
  CHECK(saw_parse);
}

TEST_CASE("tolerances outside the window are rejected") {
  CHECK(!parse_config("tol = 2e-4\n", "geodesic").ok());
  CHECK(!parse_config("tol = 1e-13\n", "geodesic").ok());
  CHECK(parse_config("tol = 1e-12\n", "geodesic").ok());
  CHECK(parse_config("tol = 1e-4\n", "geodesic").ok());
}

TEST_CASE("enum keys only accept listed values") {
  CHECK(!parse_config("surface = klein\n", "curvature").ok());
  CHECK(parse_config("surface = graph\n", "curvature").ok());
  CHECK(!parse_config("graph = hexagonal\n", "assemble").ok());
}

TEST_CASE("a foreign section name is not silently accepted") {
  ParseResult r = parse_config("[geodesic]\nwaist = 2\n", "cusp");
  CHECK(!r.ok());
}

TEST_CASE("schemas list the documented vocabulary") {
  auto cusp = config_schema("cusp");
  CHECK(cusp.count("profile"));
  CHECK(cusp.count("tol"));
  auto vis = config_schema("visibility");
  CHECK(vis.count("alpha0"));
  CHECK(config_schema("nonsense").empty());
}

TEST_CASE("numeric accessors parse infinity and fall back") {
  RunConfig cfg;
  cfg.values["x"] = "inf";
  cfg.values["k"] = "42";
  CHECK(std::isinf(cfg.get_num("x", 0.0)));
  CHECK(cfg.get_int("k", 0) == 42);
  CHECK(cfg.get_num("missing", 2.5) == 2.5);
  CHECK(cfg.get("missing", "fallback") == "fallback");
  CHECK(!cfg.has("missing"));
}
