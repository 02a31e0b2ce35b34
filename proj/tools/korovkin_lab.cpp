// korovkin-lab: command-line front end for the experiment runner.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "korovkin/error.hpp"
#include "korovkin/experiment.hpp"
#include "korovkin/report.hpp"

using namespace korovkin;

namespace {

/// Runs a shortcut config: artifacts go to --output-dir when given, the
/// report JSON always goes to stdout.
int run_shortcut(const nlohmann::json& doc) {
  try {
    const ExperimentConfig config = parse_config(doc);
    const ReportData data = run_experiment(config);
    std::cout << render_json(data);
    if (!config.output_dir.empty() && config.output_dir != "-") emit_report(data, config.output_dir);
    return data.pass ? kExitOk : kExitExpectation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::io ? kExitIo : kExitInvalidConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Korovkin-type approximation laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "run an experiment described by a JSON config");
  run_cmd->add_option("--config", config_path, "path to the JSON config")->required();

  std::string matrix = "cesaro";
  std::string set = "squares";
  std::size_t imax = 5000;
  std::string density_out = "-";
  auto* density_cmd = app.add_subcommand("density", "triangular Psi-A density of a column set");
  density_cmd->add_option("--matrix", matrix, "summability matrix")
      ->check(CLI::IsMember({"cesaro", "degenerate"}));
  density_cmd->add_option("--set", set, "column set")->check(CLI::IsMember({"squares", "even", "all"}));
  density_cmd->add_option("--imax", imax, "row horizon")->check(CLI::Range(32, 100000000));
  density_cmd->add_option("--output-dir", density_out, "also write report.json and evidence.csv here");

  std::string system = "euclid";
  std::size_t resolution = 101;
  std::string system_out = "-";
  auto* system_cmd = app.add_subcommand("check-system", "verify (P1)-(P3) for a test-function system");
  system_cmd->add_option("--system", system, "test system")->check(CLI::IsMember({"euclid", "trig"}));
  system_cmd->add_option("--resolution", resolution, "grid resolution")->check(CLI::Range(4, 2000));
  system_cmd->add_option("--output-dir", system_out, "also write report.json and evidence.csv here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  if (*run_cmd) {
    try {
      return run(load_config(config_path));
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return e.kind() == ErrorKind::io ? kExitIo : kExitInvalidConfig;
    }
  }
  if (*density_cmd) {
    return run_shortcut({{"experiment", "density"},
                         {"horizon", imax},
                         {"output_dir", density_out},
                         {"params", {{"matrix", matrix}, {"set", set}, {"i_max", imax}}}});
  }
  nlohmann::json grid = {{"region", "box"}, {"dimension", 1}, {"resolution", resolution}, {"layout", "lattice"}};
  if (system == "trig") grid["bounds"] = {{0.3, 1.2}};
  return run_shortcut({{"experiment", "check-system"},
                       {"output_dir", system_out},
                       {"grid", grid},
                       {"params", {{"system", system}}}});
}
