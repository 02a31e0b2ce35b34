#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "korovkin/net.hpp"
#include "korovkin/summability.hpp"
#include "korovkin/tolerances.hpp"

namespace korovkin {

struct OrdinaryMode {};
struct FrechetMode {};

/// Free filter generated by a density-one set F: a set is large iff it
/// contains every member of F in the tail window.
struct DensityFilterMode {
  std::string name;
  std::function<bool(std::size_t)> member;
};

struct PsiAStatisticalMode {
  SummabilityMatrix matrix;
  ShapeFunction shape;
  std::size_t horizon = 0;
  AxiomReport axioms;
  /// W_j: mean over tail rows of a_{i,j}[Ψ(i,j) >= 0], j = 1..horizon.
  std::shared_ptr<const std::vector<double>> column_weights;
};

struct AlmostMode {
  std::size_t m_max = 0;
};

/// A concrete limit functional (ℓ) evaluated on finite nets.
class ConvergenceMode {
 public:
  using Variant =
      std::variant<OrdinaryMode, FrechetMode, DensityFilterMode, PsiAStatisticalMode, AlmostMode>;

  static ConvergenceMode ordinary();
  static ConvergenceMode frechet();
  static ConvergenceMode density_filter(std::string name, std::function<bool(std::size_t)> member);
  /// F = ℕ minus the perfect squares.
  static ConvergenceMode non_squares();
  /// Validates (A1)-(A3) at `horizon`; throws axioms_failed otherwise.
  static ConvergenceMode psi_a_statistical(SummabilityMatrix matrix, ShapeFunction shape,
                                           std::size_t horizon, const Tolerances& tol = {});
  /// Same, but skips validation. Only for demonstrating what goes wrong
  /// when (A2) fails; the axiom report is still attached.
  static ConvergenceMode psi_a_statistical_unchecked(SummabilityMatrix matrix, ShapeFunction shape,
                                                     std::size_t horizon,
                                                     const Tolerances& tol = {});
  static ConvergenceMode almost(std::size_t m_max);

  const Variant& variant() const noexcept { return variant_; }
  std::string name() const;
  bool is_almost() const noexcept { return std::holds_alternative<AlmostMode>(variant_); }

 private:
  explicit ConvergenceMode(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

struct EpsCheck {
  double eps = 0.0;
  /// Exceptional count (Ordinary/Frechet/DensityFilter), density estimate
  /// (PsiAStatistical) or sup block-mean deviation (Almost).
  double statistic = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct LimitReport {
  bool converges = false;
  std::vector<EpsCheck> checks;
  /// Largest failing ε, or the smallest ε when everything passed.
  EpsCheck worst;
};

LimitReport mode_limit(const Net& x, const ConvergenceMode& mode, double candidate,
                       const std::vector<double>& eps_schedule, const Tolerances& tol = {});

struct WeightedPoint {
  double value;
  double weight;
};

/// The points a filter mode looks at, with their weights and the measure
/// at or below which a set counts as small.
struct FilterWindow {
  std::vector<WeightedPoint> points;
  double small_threshold = 0.0;
};

FilterWindow filter_window(const Net& x, const ConvergenceMode& mode, const Tolerances& tol = {});

/// Measure of {w : pred(x_w)} in the mode's window, ascending index order.
double window_measure(const FilterWindow& window, const std::function<bool(double)>& pred);

struct LimsupLiminf {
  double limsup;
  double liminf;
};

/// Filter limsup/liminf by bisection. Almost mode is rejected.
LimsupLiminf filter_limsup_liminf(const Net& x, const ConvergenceMode& mode,
                                  const Tolerances& tol = {});

/// The common value of limsup and liminf when they agree within level_tol.
std::optional<double> filter_limit(const Net& x, const ConvergenceMode& mode,
                                   const Tolerances& tol = {});

}  // namespace korovkin
