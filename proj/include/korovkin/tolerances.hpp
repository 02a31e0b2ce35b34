#pragma once

namespace korovkin {

/// Cut-offs that replace exact limits by finite-horizon statistics.
/// Every operation taking a `Tolerances` uses these defaults unless the
/// caller overrides a field.
struct Tolerances {
  double density_tol = 1e-2;
  double a2_tol = 1e-2;
  double a3_tol = 1e-2;
  double o_tol = 1e-2;
  double level_tol = 1e-6;
  double big_c_cap = 1e6;
};

inline constexpr Tolerances kDefaultTolerances{};

/// Slack used for (A1) row sums.
inline constexpr double kRowSumSlack = 1e-12;

/// Iterations of the limsup/liminf bisection.
inline constexpr int kBisectionIterations = 60;

}  // namespace korovkin
