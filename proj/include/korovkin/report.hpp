#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "korovkin/rates.hpp"
#include "korovkin/tolerances.hpp"

namespace korovkin {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct ReportData {
  nlohmann::json config = nlohmann::json::object();
  Tolerances tolerances;
  std::map<std::string, std::string> classifications;
  std::map<std::string, double> limsup_estimates;
  bool pass = true;
  nlohmann::json summary = nlohmann::json::object();
  CsvTable evidence;
};

/// Round-trip decimal ("%.17g"), with "inf", "-inf" and "nan" spelled out.
std::string format_double(double v);
/// Finite values as numbers, the rest as format_double strings.
nlohmann::json json_number(double v);
nlohmann::json tolerances_json(const Tolerances& tol);

std::string render_csv(const CsvTable& table);
std::string render_json(const ReportData& data);

/// Writes report.json and evidence.csv into `dir`, creating it if needed.
void emit_report(const ReportData& data, const std::filesystem::path& dir);

/// Columns w,err_e0,...,err_em,err_f,ratio_f,class; one block of rows per probe.
CsvTable rate_evidence_table(const RateReport& report);

}  // namespace korovkin
