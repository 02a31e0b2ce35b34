#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "korovkin/grid.hpp"

namespace korovkin {

using ScalarField = std::function<double(std::span<const double>)>;

/// Values of a function at the nodes of a grid, optionally backed by an
/// analytic evaluator for off-node queries.
class FunctionSample {
 public:
  static FunctionSample from_field(GridPtr grid, ScalarField field);
  static FunctionSample from_values(GridPtr grid, std::vector<double> values);
  static FunctionSample constant(GridPtr grid, double c);
  static FunctionSample zero(GridPtr grid) { return constant(std::move(grid), 0.0); }

  const Grid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t k) const noexcept { return values_[k]; }

  bool has_evaluator() const noexcept { return static_cast<bool>(field_); }
  const ScalarField& evaluator() const noexcept { return field_; }

  /// Analytic evaluator when present, else multilinear interpolation on
  /// box grids. Simplex samples without an evaluator cannot be queried
  /// off-node.
  double evaluate(std::span<const double> point) const;

  double sup_abs() const noexcept;

  FunctionSample scaled(double s) const;
  FunctionSample abs() const;
  FunctionSample map(const std::function<double(double)>& fn) const;

  bool shares_grid(const FunctionSample& other) const noexcept;

 private:
  FunctionSample(GridPtr grid, std::vector<double> values, ScalarField field);

  GridPtr grid_;
  std::vector<double> values_;
  ScalarField field_;
};

FunctionSample operator+(const FunctionSample& a, const FunctionSample& b);
FunctionSample operator-(const FunctionSample& a, const FunctionSample& b);
FunctionSample operator*(double s, const FunctionSample& a);

/// Reads rows `x_1,...,x_N,value` (optional header) and matches each row to
/// a grid node. Every node must appear exactly once.
FunctionSample read_function_csv(std::istream& in, GridPtr grid);

}  // namespace korovkin
