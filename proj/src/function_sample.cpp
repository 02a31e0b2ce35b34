#include "korovkin/function_sample.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <string>

#include "korovkin/error.hpp"

namespace korovkin {

FunctionSample::FunctionSample(GridPtr grid, std::vector<double> values, ScalarField field)
    : grid_(std::move(grid)), values_(std::move(values)), field_(std::move(field)) {
  if (!grid_) throw Error(ErrorKind::invalid_argument, "sample without grid");
  if (values_.size() != grid_->size())
    throw Error(ErrorKind::grid_mismatch, "value count differs from node count");
  for (double v : values_)
    if (!std::isfinite(v)) throw Error(ErrorKind::non_finite, "sample value");
}

FunctionSample FunctionSample::from_field(GridPtr grid, ScalarField field) {
  std::vector<double> v(grid->size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = field(grid->node(k));
  return FunctionSample(std::move(grid), std::move(v), std::move(field));
}

FunctionSample FunctionSample::from_values(GridPtr grid, std::vector<double> values) {
  return FunctionSample(std::move(grid), std::move(values), nullptr);
}

FunctionSample FunctionSample::constant(GridPtr grid, double c) {
  return from_field(std::move(grid), [c](std::span<const double>) { return c; });
}

namespace {

/// Bracketing cell and local coordinate along one tensor axis; outside the
/// node range the boundary cell is extended linearly.
std::pair<std::size_t, double> locate(const std::vector<double>& nodes, double x) {
  const std::size_t n = nodes.size();
  std::size_t k = static_cast<std::size_t>(std::upper_bound(nodes.begin(), nodes.end(), x) - nodes.begin());
  k = std::clamp<std::size_t>(k, 1, n - 1) - 1;
  const double t = (x - nodes[k]) / (nodes[k + 1] - nodes[k]);
  return {k, t};
}

}  // namespace

double FunctionSample::evaluate(std::span<const double> point) const {
  if (field_) return field_(point);
  if (!grid_->is_tensor())
    throw Error(ErrorKind::unsupported, "off-node evaluation on a simplex needs an analytic evaluator");
  const std::size_t dim = grid_->dimension();
  const std::size_t r = grid_->resolution();
  std::vector<std::size_t> cell(dim);
  std::vector<double> frac(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    const auto [k, t] = locate(grid_->axis_nodes(d), point[d]);
    cell[d] = k;
    frac[d] = t;
  }
  double result = 0.0;
  for (std::size_t corner = 0; corner < (std::size_t{1} << dim); ++corner) {
    double w = 1.0;
    std::size_t flat = 0;
    for (std::size_t d = 0; d < dim; ++d) {
      const bool up = (corner >> d) & 1U;
      w *= up ? frac[d] : 1.0 - frac[d];
      flat = flat * r + cell[d] + (up ? 1 : 0);
    }
    result += w * values_[flat];
  }
  return result;
}

double FunctionSample::sup_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

FunctionSample FunctionSample::map(const std::function<double(double)>& fn) const {
  std::vector<double> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = fn(values_[k]);
  ScalarField field;
  if (field_) field = [inner = field_, fn](std::span<const double> p) { return fn(inner(p)); };
  return FunctionSample(grid_, std::move(v), std::move(field));
}

FunctionSample FunctionSample::scaled(double s) const {
  return map([s](double x) { return s * x; });
}

FunctionSample FunctionSample::abs() const {
  return map([](double x) { return std::abs(x); });
}

bool FunctionSample::shares_grid(const FunctionSample& other) const noexcept {
  return grid_ == other.grid_ || grid_->same_as(*other.grid_);
}

namespace {
FunctionSample combine(const FunctionSample& a, const FunctionSample& b, double sb) {
  if (!a.shares_grid(b)) throw Error(ErrorKind::grid_mismatch, "samples live on different grids");
  std::vector<double> v(a.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] + sb * b[k];
  if (a.has_evaluator() && b.has_evaluator()) {
    return FunctionSample::from_field(
        a.grid_ptr(), [fa = a.evaluator(), fb = b.evaluator(), sb](std::span<const double> p) {
          return fa(p) + sb * fb(p);
        });
  }
  return FunctionSample::from_values(a.grid_ptr(), std::move(v));
}
}  // namespace

FunctionSample operator+(const FunctionSample& a, const FunctionSample& b) { return combine(a, b, 1.0); }
FunctionSample operator-(const FunctionSample& a, const FunctionSample& b) { return combine(a, b, -1.0); }
FunctionSample operator*(double s, const FunctionSample& a) { return a.scaled(s); }

FunctionSample read_function_csv(std::istream& in, GridPtr grid) {
  const std::size_t dim = grid->dimension();
  std::vector<double> values(grid->size(), 0.0);
  std::vector<bool> seen(grid->size(), false);
  const double match_tol = 1e-9 * std::max(1.0, grid->h_min());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        fields.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (line_no == 1) continue;  // header
      throw Error(ErrorKind::io, "non-numeric CSV row " + std::to_string(line_no));
    }
    if (fields.size() != dim + 1)
      throw Error(ErrorKind::io, "CSV row " + std::to_string(line_no) + " needs " +
                                     std::to_string(dim + 1) + " columns");
    std::span<const double> point(fields.data(), dim);
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid->size(); ++k) {
      const double d = grid->distance(point, grid->node(k));
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    if (best_d > match_tol)
      throw Error(ErrorKind::grid_mismatch, "CSV row " + std::to_string(line_no) + " is not a grid node");
    if (seen[best]) throw Error(ErrorKind::io, "node given twice in CSV row " + std::to_string(line_no));
    seen[best] = true;
    values[best] = fields[dim];
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorKind::io, "CSV does not cover every grid node");
  return FunctionSample::from_values(std::move(grid), std::move(values));
}

}  // namespace korovkin
