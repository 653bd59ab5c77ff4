#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "anosov/experiments.hpp"
#include "anosov/report.hpp"

using namespace anosov;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentReport sample_report() {
  ExperimentReport r;
  r.experiment = "geodesic";
  r.identity = "a = b, for all c";
  r.records.push_back(make_case("geodesic", "conj:j1", -5.0, 0.1, 1, 1.0 / 3.0, 0.0, 1e-12, false));
  r.records.push_back(make_case("geodesic", "conj:j2", 2.5, -2.0, 2, 2.0000000001, 2.0, 1e-6, true));
  r.records.push_back(make_case("geodesic", "inf", 0.0, 0.0, 0, INFINITY, 1.0, 1.0, true));
  return r;
}

}  // namespace

TEST_CASE("case records") {
  const auto r = make_case("x", "id", 1, 2, 1, 3.0, 4.0, 0.5, true);
  CHECK(r.abs_error == 1.0);
  CHECK(r.rel_error == 0.25);
  CHECK(make_case("x", "id", 0, 0, 0, -2.0, 0.0, 0.5, true).rel_error == 2.0);
  CHECK_FALSE(make_case("x", "id", 0, 0, 0, std::nan(""), 0.0, 0.5, true).pass);
  const auto report = sample_report();
  CHECK_FALSE(report.pass());
  CHECK(report.failures() == 2);
}

TEST_CASE("CSV layout and round trip") {
  const auto report = sample_report();
  const std::string csv = format_csv(report);
  std::istringstream lines(csv);
  std::string first, header, row;
  std::getline(lines, first);
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(first == "# a = b, for all c");
  CHECK(header == "experiment,case_id,t,s,j,measured,expected,abs_error,rel_error,pass");
  CHECK(row == "geodesic,conj:j1,-5,0.10000000000000001,1,0.33333333333333331,0,0.33333333333333331,"
               "0.33333333333333331,false");

  const auto parsed = parse_csv(csv);
  CHECK(format_csv(parsed) == csv);
  CHECK(parsed.identity == report.identity);
  REQUIRE(parsed.records.size() == 3);
  CHECK(parsed.records[1].measured == report.records[1].measured);
  CHECK(std::isinf(parsed.records[2].measured));

  CHECK_THROWS_AS(parse_csv("nonsense\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("experiment,case_id,t,s,j,measured,expected,abs_error,rel_error,pass\nx,y,1,2\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("experiment,case_id,t,s,j,measured,expected,abs_error,rel_error,pass\nx,y,1,2,j,1,1,0,0,true\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("experiment,case_id,t,s,j,measured,expected,abs_error,rel_error,pass\nx,y,1,2,1,1,1,0,0,yes\n"),
                  std::invalid_argument);

  ExperimentReport bad = report;
  bad.records[0].case_id = "a,b";
  CHECK_THROWS_AS(format_csv(bad), std::invalid_argument);
}

TEST_CASE("JSON mirrors the CSV fields") {
  auto report = sample_report();
  report.extra_key = "extra";
  report.extra_json = "[1, 2]";
  const auto doc = nlohmann::json::parse(format_json(report));
  CHECK(doc["experiment"] == "geodesic");
  CHECK(doc["pass"] == false);
  CHECK(doc["extra"].size() == 2);
  REQUIRE(doc["records"].size() == 3);
  const auto& rec = doc["records"][1];
  for (const char* key : {"experiment", "case_id", "t", "s", "j", "measured", "expected", "abs_error", "rel_error", "pass"}) {
    CHECK(rec.contains(key));
  }
  CHECK(rec["measured"].get<double>() == report.records[1].measured);
  CHECK(doc["records"][2]["measured"].is_null());
}

TEST_CASE("emitting curves") {
  const auto dir = std::filesystem::temp_directory_path() / "anosov_report_test";
  std::filesystem::create_directories(dir);
  const auto report = sample_report();
  emit_curve(report.records, (dir / "curve.csv").string(), ReportFormat::csv);
  const auto text = slurp(dir / "curve.csv");
  CHECK(text.starts_with("experiment,case_id"));
  CHECK(format_csv(parse_csv(text)) == text);
  CHECK_THROWS_AS(emit_curve({}, (dir / "empty.csv").string(), ReportFormat::csv), std::invalid_argument);
  CHECK_THROWS_AS(emit_curve(report.records, (dir / "missing" / "x.csv").string(), ReportFormat::csv),
                  std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("divergence curve for j = 1 over t = 0..6") {
  auto cfg = default_config("quantum-divergence");
  cfg.t_min = 0;
  cfg.t_max = 6;
  cfg.samples = 1;
  const auto report = run(cfg);
  std::vector<CaseRecord> curve;
  for (const auto& r : report.records) {
    if (r.j == 1) curve.push_back(r);
  }
  REQUIRE(curve.size() == 7);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].t == static_cast<double>(i));
    CHECK(curve[i].rel_error <= 1e-8);
    CHECK(curve[i].pass);
  }
}

TEST_CASE("every suite runs and names its identity") {
  for (const auto& name : experiment_names()) {
    if (name == "nogo-search" || name == "cat-ergodic") continue;  // covered by the acceptance and CLI runs
    const auto report = run(default_config(name));
    INFO(name);
    CHECK(report.pass());
    CHECK_FALSE(report.identity.empty());
    CHECK_FALSE(report.records.empty());
    for (const auto& r : report.records) CHECK(r.experiment == name);
  }
  auto zero = default_config("cat-quantum");
  zero.tolerances["defect"] = 0.0;
  CHECK_FALSE(run(zero).pass());
}
