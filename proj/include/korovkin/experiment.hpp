#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "korovkin/convergence.hpp"
#include "korovkin/grid.hpp"
#include "korovkin/modular.hpp"
#include "korovkin/report.hpp"

namespace korovkin {

inline constexpr std::size_t kMinConfigHorizon = 32;

enum ExitCode : int { kExitOk = 0, kExitExpectation = 1, kExitInvalidConfig = 2, kExitIo = 3 };

struct GridSpec {
  Region region = Region::unit_box(1);
  std::size_t resolution = 101;
  NodeLayout layout = NodeLayout::Midpoint;
};

struct ExperimentConfig {
  std::string experiment;
  nlohmann::json mode = {{"variant", "frechet"}};
  std::size_t horizon = 200;
  GridSpec grid;
  PhiFunction phi = PhiFunction::linear();
  double gamma = 1.0;
  double xi_p = 1.0;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json expect = nlohmann::json::object();

  /// Normalized echo with every default filled in.
  nlohmann::json to_json() const;
};

/// Strict parse: unknown or mistyped fields throw Error(invalid_argument).
ExperimentConfig parse_config(const nlohmann::json& doc);
/// Reads and parses a JSON file; unreadable files throw Error(io).
ExperimentConfig load_config(const std::filesystem::path& path);

ConvergenceMode build_mode(const nlohmann::json& spec, std::size_t horizon);

/// Runs the experiment and evaluates the declared expectations.
ReportData run_experiment(const ExperimentConfig& config);

/// run_experiment + emit_report; returns the process exit status.
int run(const ExperimentConfig& config);

}  // namespace korovkin
