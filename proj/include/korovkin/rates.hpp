#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "korovkin/convergence.hpp"
#include "korovkin/function_sample.hpp"
#include "korovkin/modular.hpp"
#include "korovkin/net.hpp"
#include "korovkin/operators.hpp"
#include "korovkin/rate.hpp"
#include "korovkin/test_system.hpp"
#include "korovkin/tolerances.hpp"

namespace korovkin {

/// τ = min{γ C1 / (2 C2 (m+1) N Q²), γ / (2 M Q²)}; `count` is m + 1.
double lipschitz_tau(double gamma, double c1, double c2, std::size_t count, double n_bound, double q,
                     double m);
/// τ = γ / (8 M Q²).
double continuity_tau(double gamma, double m, double q);

/// ξ_w = 1 / w^p on 1..horizon.
Net power_xi(std::size_t horizon, double p);

struct LipschitzProbe {
  std::string name;
  FunctionSample f;
  double c2 = 1.0;
};

struct ProbeResult {
  std::string name;
  double tau = 0.0;
  double m = 0.0;
  Net error;
  Net ratio;
  RateClass classification;
};

struct RateReport {
  double gamma = 0.0;
  /// Smallest τ used by any probe.
  double tau = 0.0;
  std::vector<Net> xi_r;
  Net xi;
  std::optional<Net> xi0;
  std::optional<Net> xistar;
  std::optional<Net> delta_net;
  /// Test-function error nets (e_0..e_m, or e_0 and ω for continuity).
  std::vector<std::string> test_names;
  std::vector<Net> test_errors;
  std::vector<RateClass> test_classes;
  std::vector<ProbeResult> probes;
  /// "all tests o ⇒ probes o" and "all tests O ⇒ probes O"; vacuous premises hold.
  bool implication_little_o = true;
  bool implication_big_o = true;
};

RateReport rates_pipeline_lipschitz(const OperatorFamily& family, const TestSystem& system,
                                    const OrliczModular& rho, const std::vector<Net>& xi_r,
                                    double gamma, const std::vector<LipschitzProbe>& probes,
                                    const ConvergenceMode& mode, const Tolerances& tol = {});

RateReport rates_pipeline_continuity(const OperatorFamily& family, const FunctionSample& f,
                                     const OrliczModular& rho, const Net& xi0, const Net& xistar,
                                     double gamma, const ConvergenceMode& mode,
                                     const Tolerances& tol = {});

/// s ↦ T_w(d(s, ·))(s), sup over nodes where |f| > 1e-12 sup|f|.
double delta_f(const OperatorFamily& family, const FunctionSample& f, std::size_t w);

struct DecompositionCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// ρ[τ(T_w f − f)] versus ρ[2τ C2/C1 · (T_w P_(·))(·)] + ρ[2τ M (T_w e_0 − e_0)].
DecompositionCheck decomposition_check(const OperatorFamily& family, const TestSystem& system,
                                       const OrliczModular& rho, const LipschitzProbe& probe,
                                       double tau, double m, std::size_t w);

struct RhoStarReport {
  double e_est = 0.0;
  bool holds = false;
  /// Ratio net per (probe, τ), probe-major.
  std::vector<Net> ratios;
};

RhoStarReport check_rho_star(const OperatorFamily& family, const OrliczModular& rho,
                             const std::vector<FunctionSample>& probes, const ConvergenceMode& mode,
                             const std::vector<double>& tau_list, std::size_t horizon,
                             const Tolerances& tol = {});

}  // namespace korovkin
