#include "korovkin/report.hpp"

#include <cmath>
#include <fstream>
#include <system_error>

#include <fmt/format.h>

#include "korovkin/error.hpp"

namespace korovkin {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

nlohmann::json tolerances_json(const Tolerances& tol) {
  return {{"density_tol", tol.density_tol}, {"a2_tol", tol.a2_tol},     {"a3_tol", tol.a3_tol},
          {"o_tol", tol.o_tol},             {"level_tol", tol.level_tol}, {"big_C_cap", tol.big_c_cap}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw Error(ErrorKind::io, "write failed for " + path.string());
}

}  // namespace

std::string render_csv(const CsvTable& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (k) out += ',';
      out += csv_field(fields[k]);
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string render_json(const ReportData& data) {
  nlohmann::json j;
  j["config"] = data.config;
  j["tolerances"] = tolerances_json(data.tolerances);
  j["classifications"] = nlohmann::json::object();
  for (const auto& [k, v] : data.classifications) j["classifications"][k] = v;
  j["limsup_estimates"] = nlohmann::json::object();
  for (const auto& [k, v] : data.limsup_estimates) j["limsup_estimates"][k] = json_number(v);
  j["pass"] = data.pass;
  j["summary"] = data.summary;
  return j.dump(2) + "\n";
}

void emit_report(const ReportData& data, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "report.json", render_json(data));
  write_file(dir / "evidence.csv", render_csv(data.evidence));
}

CsvTable rate_evidence_table(const RateReport& report) {
  CsvTable t;
  t.header.push_back("w");
  for (const auto& name : report.test_names) t.header.push_back("err_" + name);
  t.header.insert(t.header.end(), {"err_f", "ratio_f", "class"});
  for (const auto& probe : report.probes) {
    const std::string cls = to_string(probe.classification.kind);
    for (std::size_t w = 1; w <= probe.error.horizon(); ++w) {
      std::vector<std::string> row{std::to_string(w)};
      for (const auto& net : report.test_errors) row.push_back(format_double(net(w)));
      row.push_back(format_double(probe.error(w)));
      row.push_back(format_double(probe.ratio(w)));
      row.push_back(cls);
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

}  // namespace korovkin
