#pragma once

#include <string>
#include <vector>

#include "korovkin/function_sample.hpp"
#include "korovkin/grid.hpp"

namespace korovkin {

enum class PhiFamily { Power, Linear, ExpM1 };

/// Young-type function φ: [0, ∞) → [0, ∞) with φ(0) = 0.
struct PhiFunction {
  PhiFamily family = PhiFamily::Linear;
  double p = 1.0;

  static PhiFunction power(double p);
  static PhiFunction linear() { return {PhiFamily::Linear, 1.0}; }
  static PhiFunction expm1() { return {PhiFamily::ExpM1, 1.0}; }

  double operator()(double u) const noexcept;
  std::string name() const;
  /// φ(0) = 0, monotone and positive on a probe ladder; throws otherwise.
  void validate() const;
};

/// ρ^φ[f] = ∫ φ(|f|) dμ over a quadrature grid. The shipped φ are convex,
/// so Q = 1 is a valid quasi-semiconvexity constant.
class OrliczModular {
 public:
  OrliczModular(PhiFunction phi, GridPtr grid, double q = 1.0);

  const PhiFunction& phi() const noexcept { return phi_; }
  const GridPtr& grid() const noexcept { return grid_; }
  double q() const noexcept { return q_; }

  double operator()(const FunctionSample& f) const;
  /// ρ[c·1] = φ(|c|)·μ(G).
  double of_constant(double c) const;

 private:
  PhiFunction phi_;
  GridPtr grid_;
  double q_;
};

double orlicz_modular(const FunctionSample& f, const OrliczModular& rho);

/// max |f(s) - f(t)| over node pairs with d(s, t) <= delta.
double modulus_of_continuity(const FunctionSample& f, double delta);

struct ModularPropertyReport {
  bool monotone = false;
  bool finite = false;
  bool strongly_finite = false;
  bool quasi_semiconvex_ok = false;
  /// ρ[λ·χ_G] for λ = 0.1, 1, 10.
  std::vector<double> indicator_values;
};

ModularPropertyReport check_modular_properties(const OrliczModular& rho,
                                               const std::vector<FunctionSample>& probes);

}  // namespace korovkin
