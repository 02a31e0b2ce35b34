#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "korovkin/tolerances.hpp"

namespace korovkin {

/// Nonnegative infinite matrix given by its entries and a row support
/// bound J(i): a_{i,j} = 0 for j > J(i).
struct SummabilityMatrix {
  std::string name;
  std::function<double(std::size_t, std::size_t)> entry;
  std::function<std::size_t(std::size_t)> row_support;

  static SummabilityMatrix cesaro();
  /// a_{i,j} = 1/i^2 for j <= i^2. Fails (A2) under the triangular shape.
  static SummabilityMatrix degenerate();
  static SummabilityMatrix identity();
  /// a_{i,j} = 1/L(i) on the band i - L(i) < j <= i with L(i) = ceil(sqrt(i)).
  static SummabilityMatrix sqrt_band();
};

/// Ψ(i, j). `nonnegative_bound`, when set, returns an upper bound on the
/// j with Ψ(i, j) >= 0 so row scans can stop early.
struct ShapeFunction {
  std::string name;
  std::function<double(std::size_t, std::size_t)> psi;
  std::function<std::size_t(std::size_t)> nonnegative_bound;

  /// Ψ(i, j) = i - j.
  static ShapeFunction triangular();
  /// Ψ ≡ 0: every entry of the row counts.
  static ShapeFunction full();
};

double cesaro_entry(std::size_t i, std::size_t j);
double degenerate_entry(std::size_t i, std::size_t j);

/// Last column index a row scan has to visit.
std::size_t row_scan_bound(const SummabilityMatrix& a, const ShapeFunction& shape, std::size_t i);

/// Σ_{j: Ψ(i,j) >= 0} a_{i,j}, ascending j, compensated.
double restricted_row_sum(const SummabilityMatrix& a, const ShapeFunction& shape, std::size_t i);

struct AxiomReport {
  bool a1 = false;
  double a1_max_row_sum = 0.0;
  bool a2 = false;
  double a2_estimate = 0.0;
  bool a3 = false;
  std::vector<std::size_t> a3_probes;
  std::size_t i_max = 0;

  bool all() const noexcept { return a1 && a2 && a3; }
};

inline constexpr std::size_t kMinAxiomHorizon = 32;

AxiomReport check_summability_axioms(const SummabilityMatrix& a, const ShapeFunction& shape,
                                     std::size_t i_max, const Tolerances& tol = {});

using PairPredicate = std::function<bool(std::size_t, std::size_t)>;

struct DensityReport {
  double estimate = 0.0;
  std::vector<std::pair<std::size_t, double>> partial_sums;
  bool converged = false;
  double oscillation = 0.0;
};

/// Partial sums S_i = Σ_{j: (i,j) ∈ K, Ψ(i,j) >= 0} a_{i,j} for i <= i_max,
/// summarized over the last quarter of rows.
DensityReport triangular_density(const PairPredicate& k, const SummabilityMatrix& a,
                                 const ShapeFunction& shape, std::size_t i_max,
                                 const Tolerances& tol = {});

}  // namespace korovkin
