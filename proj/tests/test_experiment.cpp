#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "korovkin/experiment.hpp"
#include "support.hpp"

using namespace korovkin;
using nlohmann::json;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("korovkin_exp_" + name);
  std::filesystem::remove_all(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config parsing fills defaults") {
  const ExperimentConfig c = parse_config({{"experiment", "density"}, {"output_dir", "x"}});
  CHECK(c.horizon == 200);
  CHECK(c.grid.resolution == 101);
  CHECK(c.phi.family == PhiFamily::Linear);
  CHECK(c.seed == 1);
  const json echo = c.to_json();
  CHECK(echo["xi"]["p"] == 1.0);
  CHECK(parse_config(echo).to_json() == echo);
}

TEST_CASE("config parsing is strict") {
  auto kind = [](json doc) { return error_kind([&] { parse_config(doc); }); };
  const json base = {{"experiment", "density"}, {"output_dir", "x"}};
  CHECK(kind(base) == std::nullopt);
  json typo = base;
  typo["horizn"] = 100;
  CHECK(kind(typo) == ErrorKind::invalid_argument);
  json nested = base;
  nested["grid"] = {{"resolution", 10}, {"colour", "red"}};
  CHECK(kind(nested) == ErrorKind::invalid_argument);
  json small = base;
  small["horizon"] = 31;
  CHECK(kind(small) == ErrorKind::invalid_argument);
  json res = base;
  res["grid"] = {{"resolution", 3}};
  CHECK(kind(res) == ErrorKind::invalid_argument);
  json xi = base;
  xi["xi"] = {{"family", "power"}, {"p", 0}};
  CHECK(kind(xi) == ErrorKind::invalid_argument);
  CHECK(error_kind([] { build_mode({{"variant", "almost"}}, 200); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([] { build_mode({{"variant", "warp"}}, 200); }) == ErrorKind::invalid_argument);
  json exp = base;
  exp["experiment"] = "nonsense";
  CHECK(kind(exp) == ErrorKind::invalid_argument);
  CHECK(kind({{"experiment", "density"}}) == ErrorKind::invalid_argument);
  json wrong_type = base;
  wrong_type["gamma"] = "big";
  CHECK(kind(wrong_type) == ErrorKind::invalid_argument);
}

TEST_CASE("unknown params and expectations are rejected at run time") {
  json doc = {{"experiment", "density"}, {"output_dir", scratch("params").string()}, {"params", {{"i_maxx", 100}}}};
  CHECK(run(parse_config(doc)) == kExitInvalidConfig);
  doc["params"] = json::object();
  doc["expect"] = {{"estimat_max", 0.1}};
  CHECK(run(parse_config(doc)) == kExitInvalidConfig);
}

TEST_CASE("density experiment: squares at i_max 5000") {
  const auto dir = scratch("density");
  const ExperimentConfig c = parse_config({{"experiment", "density"},
                                           {"output_dir", dir.string()},
                                           {"params", {{"matrix", "cesaro"}, {"set", "squares"}, {"i_max", 5000}}},
                                           {"expect", {{"estimate_max", 0.02}, {"axioms_hold", true}}}});
  CHECK(run(c) == kExitOk);
  const json rep = json::parse(slurp(dir / "report.json"));
  CHECK(rep["pass"] == true);
  CHECK(rep["summary"]["estimate"].get<double>() <= 0.02);
  const std::string csv = slurp(dir / "evidence.csv");
  CHECK(csv.rfind("i,partial_sum\n1,1\n", 0) == 0);
}

TEST_CASE("failed expectations give exit 1") {
  const auto dir = scratch("fail");
  const ExperimentConfig c = parse_config({{"experiment", "density"},
                                           {"output_dir", dir.string()},
                                           {"params", {{"set", "all"}, {"i_max", 100}}},
                                           {"expect", {{"estimate_max", 0.5}}}});
  CHECK(run(c) == kExitExpectation);
  CHECK(json::parse(slurp(dir / "report.json"))["pass"] == false);
}

TEST_CASE("degenerate matrix is flagged") {
  const ReportData d = run_experiment(parse_config({{"experiment", "density"},
                                                    {"output_dir", "unused"},
                                                    {"params", {{"matrix", "degenerate"}, {"i_max", 400}}},
                                                    {"expect", {{"axioms_hold", false}}}}));
  CHECK(d.pass);
  CHECK(d.summary["note"] == "(A2) fails");
  CHECK(d.summary["axioms"]["A2"] == false);
}

TEST_CASE("limit experiment: alternating sequence is almost convergent") {
  const ReportData d = run_experiment(parse_config({{"experiment", "limit"},
                                                    {"output_dir", "unused"},
                                                    {"horizon", 1000},
                                                    {"mode", {{"variant", "almost"}, {"m_max", 100}}},
                                                    {"params", {{"net", "alternating"}, {"candidate", 0.5}}},
                                                    {"expect", {{"converges", true}}}}));
  CHECK(d.pass);
  CHECK(d.evidence.header == std::vector<std::string>{"eps", "statistic", "threshold", "passed"});
}

TEST_CASE("limsup experiment") {
  const ReportData d = run_experiment(parse_config({{"experiment", "limsup"},
                                                    {"output_dir", "unused"},
                                                    {"mode", {{"variant", "frechet"}}},
                                                    {"params", {{"net", "sign"}}},
                                                    {"expect", {{"limsup", 1.0}, {"liminf", -1.0}}}}));
  CHECK(d.pass);
}

TEST_CASE("check-system experiment") {
  const ReportData d = run_experiment(parse_config(
      {{"experiment", "check-system"},
       {"output_dir", "unused"},
       {"grid", {{"bounds", {{0.3, 1.2}}}, {"resolution", 400}, {"layout", "lattice"}}},
       {"params", {{"system", "trig"}, {"delta_min", 0.1}}},
       {"expect", {{"p1_ok", true}, {"c0_min", 0.6}}}}));
  CHECK(d.pass);
  CHECK(d.summary["C0"].get<double>() == doctest::Approx(0.62161).epsilon(1e-5));
}

TEST_CASE("rho-star experiment") {
  const ReportData d = run_experiment(parse_config({{"experiment", "rho-star"},
                                                    {"output_dir", "unused"},
                                                    {"horizon", 64},
                                                    {"mode", {{"variant", "density-filter"}}},
                                                    {"params", {{"family", "zero"}, {"taus", {1.0, 0.5}}}},
                                                    {"expect", {{"holds", true}, {"e_est_max", 1e-9}}}}));
  CHECK(d.pass);
}

TEST_CASE("mellin-rates experiment reproduces the documented classification") {
  const auto dir = scratch("mellin");
  const ExperimentConfig c = parse_config(
      {{"experiment", "mellin-rates"},
       {"output_dir", dir.string()},
       {"mode", {{"variant", "density-filter"}, {"set", "non-squares"}}},
       {"horizon", 200},
       {"grid", {{"resolution", 101}, {"layout", "lattice"}}},
       {"phi", {{"family", "linear"}}},
       {"gamma", 15},
       {"params", {{"delta_min", 0.18}}},
       {"expect", {{"all_big_o", true}, {"implication", true}, {"classes", {{"e1", "big-O"}}}}}});
  CHECK(run(c) == kExitOk);
  const std::string csv = slurp(dir / "evidence.csv");
  CHECK(csv.rfind("w,err_e0,err_e1,err_e2,err_f,ratio_f,class\n", 0) == 0);
  // w = 2 row: err_e1 = γ · 1/(w+2) · ∫ s ds = 15 / 8
  std::istringstream lines(csv);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  std::vector<std::string> cells;
  std::stringstream ss(row2);
  for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
  REQUIRE(cells.size() == 7);
  CHECK(cells[0] == "2");
  CHECK(std::stod(cells[2]) == doctest::Approx(15.0 / 8.0).epsilon(1e-10));
}

TEST_CASE("same config twice gives byte-identical artifacts") {
  for (const char* experiment : {"mellin-rates", "density", "check-system"}) {
    const auto dir = scratch(std::string("det_") + experiment);
    const json doc = {{"experiment", experiment}, {"horizon", 64}, {"seed", 42}, {"output_dir", dir.string()}};
    REQUIRE(run(parse_config(doc)) == kExitOk);
    const std::string first_json = slurp(dir / "report.json");
    const std::string first_csv = slurp(dir / "evidence.csv");
    REQUIRE(run(parse_config(doc)) == kExitOk);
    CHECK(slurp(dir / "report.json") == first_json);
    CHECK(slurp(dir / "evidence.csv") == first_csv);
  }
}

TEST_CASE("load_config reports unreadable and malformed files") {
  CHECK(error_kind([] { load_config("/nonexistent/korovkin.json"); }) == ErrorKind::io);
  const auto p = std::filesystem::temp_directory_path() / "korovkin_bad.json";
  std::ofstream(p) << "{ not json";
  CHECK(error_kind([&] { load_config(p); }) == ErrorKind::invalid_argument);
  std::filesystem::remove(p);
}
