#include "korovkin/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "korovkin/error.hpp"
#include "korovkin/numeric.hpp"

namespace korovkin {

double lipschitz_tau(double gamma, double c1, double c2, std::size_t count, double n_bound, double q,
                     double m) {
  if (!(gamma > 0.0) || !(c1 > 0.0) || !(c2 > 0.0) || count == 0 || !(n_bound > 0.0) ||
      !(q > 0.0) || !(m > 0.0))
    throw Error(ErrorKind::invalid_argument, "tau parameters must be positive");
  const double first = gamma * c1 / (2.0 * c2 * static_cast<double>(count) * n_bound * q * q);
  const double second = gamma / (2.0 * m * q * q);
  return std::min(first, second);
}

double continuity_tau(double gamma, double m, double q) {
  if (!(gamma > 0.0) || !(m > 0.0) || !(q > 0.0))
    throw Error(ErrorKind::invalid_argument, "tau parameters must be positive");
  return gamma / (8.0 * m * q * q);
}

Net power_xi(std::size_t horizon, double p) {
  if (!(p > 0.0)) throw Error(ErrorKind::invalid_argument, "xi exponent must be positive");
  return Net::single(horizon, [p](std::size_t w) { return std::pow(static_cast<double>(w), -p); });
}

namespace {

void require_nonzero(const Net& xi) {
  for (double v : xi.values())
    if (v == 0.0) throw Error(ErrorKind::zero_denominator, "xi net has a zero entry");
}

/// w ↦ ρ[c (T_w f − f)] on 1..horizon.
Net error_net(const OperatorFamily& family, const FunctionSample& f, const OrliczModular& rho,
              double c, std::size_t horizon) {
  std::vector<double> out(horizon);
  parallel_for(horizon, [&](std::size_t k) {
    const FunctionSample tf = family.apply(k + 1, f);
    out[k] = rho(c * (tf - f));
  });
  return Net::from_values(std::move(out));
}

Net indexwise_max(const std::vector<Net>& nets) {
  Net m = nets.front();
  for (std::size_t r = 1; r < nets.size(); ++r)
    m = m.zip(nets[r], [](double a, double b) { return std::max(a, b); });
  return m;
}

void fill_implications(RateReport& rep) {
  const bool all_o = std::all_of(rep.test_classes.begin(), rep.test_classes.end(),
                                 [](const RateClass& c) { return c.kind == RateKind::LittleO; });
  const bool all_big = std::all_of(rep.test_classes.begin(), rep.test_classes.end(),
                                   [](const RateClass& c) { return c.satisfies_big_o(); });
  rep.implication_little_o = true;
  rep.implication_big_o = true;
  for (const auto& p : rep.probes) {
    if (all_o && p.classification.kind != RateKind::LittleO) rep.implication_little_o = false;
    if (all_big && !p.classification.satisfies_big_o()) rep.implication_big_o = false;
  }
}

}  // namespace

RateReport rates_pipeline_lipschitz(const OperatorFamily& family, const TestSystem& system,
                                    const OrliczModular& rho, const std::vector<Net>& xi_r,
                                    double gamma, const std::vector<LipschitzProbe>& probes,
                                    const ConvergenceMode& mode, const Tolerances& tol) {
  if (!(gamma > 0.0)) throw Error(ErrorKind::invalid_argument, "gamma must be positive");
  if (!(system.c1 > 0.0)) throw Error(ErrorKind::axioms_failed, "test system has no positive C1");
  if (xi_r.size() != system.count())
    throw Error(ErrorKind::invalid_argument, "need one xi net per test function");
  const std::size_t horizon = xi_r.front().horizon();
  for (const auto& xi : xi_r) {
    if (xi.horizon() != horizon) throw Error(ErrorKind::horizon_mismatch, "xi horizons differ");
    require_nonzero(xi);
  }

  RateReport rep;
  rep.gamma = gamma;
  rep.xi_r = xi_r;
  rep.xi = indexwise_max(xi_r);
  for (std::size_t r = 0; r < system.count(); ++r) {
    rep.test_names.push_back("e" + std::to_string(r));
    rep.test_errors.push_back(error_net(family, system.e[r], rho, gamma, horizon));
    rep.test_classes.push_back(rate_classify(rep.test_errors.back(), xi_r[r], mode, tol));
  }

  rep.tau = std::numeric_limits<double>::infinity();
  for (const auto& probe : probes) {
    ProbeResult pr;
    pr.name = probe.name;
    pr.m = 1.0 + probe.f.sup_abs();
    pr.tau = lipschitz_tau(gamma, system.c1, probe.c2, system.count(), system.n_bound, rho.q(), pr.m);
    pr.error = error_net(family, probe.f, rho, pr.tau, horizon);
    pr.ratio = pr.error.zip(rep.xi, [](double a, double b) { return std::abs(a) / std::abs(b); });
    pr.classification = rate_classify(pr.error, rep.xi, mode, tol);
    rep.tau = std::min(rep.tau, pr.tau);
    rep.probes.push_back(std::move(pr));
  }
  if (probes.empty()) rep.tau = lipschitz_tau(gamma, system.c1, 1.0, system.count(), system.n_bound, rho.q(), 1.0);
  fill_implications(rep);
  return rep;
}

double delta_f(const OperatorFamily& family, const FunctionSample& f, std::size_t w) {
  const Grid& grid = f.grid();
  const double cut = 1e-12 * f.sup_abs();
  double best = 0.0;
  for (std::size_t s = 0; s < grid.size(); ++s) {
    if (!(std::abs(f[s]) > cut)) continue;
    std::vector<double> sn(grid.node(s).begin(), grid.node(s).end());
    const FunctionSample slice = FunctionSample::from_field(
        f.grid_ptr(), [sn, &grid](std::span<const double> t) { return grid.distance(sn, t); });
    best = std::max(best, family.value_at(w, slice, s));
  }
  return best;
}

RateReport rates_pipeline_continuity(const OperatorFamily& family, const FunctionSample& f,
                                     const OrliczModular& rho, const Net& xi0, const Net& xistar,
                                     double gamma, const ConvergenceMode& mode,
                                     const Tolerances& tol) {
  if (!(gamma > 0.0)) throw Error(ErrorKind::invalid_argument, "gamma must be positive");
  if (xi0.horizon() != xistar.horizon()) throw Error(ErrorKind::horizon_mismatch, "xi horizons differ");
  require_nonzero(xi0);
  require_nonzero(xistar);
  const double m = f.sup_abs();
  if (!(m > 0.0)) throw Error(ErrorKind::invalid_argument, "f vanishes identically");
  const std::size_t horizon = xi0.horizon();
  const double h_min = f.grid().h_min();

  RateReport rep;
  rep.gamma = gamma;
  rep.xi0 = xi0;
  rep.xistar = xistar;
  rep.xi_r = {xi0, xistar};
  rep.xi = indexwise_max(rep.xi_r);

  std::vector<double> delta(horizon);
  std::vector<double> omega(horizon);
  parallel_for(horizon, [&](std::size_t k) {
    delta[k] = delta_f(family, f, k + 1);
    omega[k] = rho.of_constant(gamma * modulus_of_continuity(f, std::max(delta[k], h_min)));
  });
  rep.delta_net = Net::from_values(delta);

  const FunctionSample e0 = FunctionSample::constant(f.grid_ptr(), 1.0);
  rep.test_names = {"e0", "omega"};
  rep.test_errors = {error_net(family, e0, rho, gamma, horizon), Net::from_values(omega)};
  rep.test_classes = {rate_classify(rep.test_errors[0], xi0, mode, tol),
                      rate_classify(rep.test_errors[1], xistar, mode, tol)};

  ProbeResult pr;
  pr.name = "f";
  pr.m = m;
  pr.tau = continuity_tau(gamma, m, rho.q());
  pr.error = error_net(family, f, rho, pr.tau, horizon);
  pr.ratio = pr.error.zip(rep.xi, [](double a, double b) { return std::abs(a) / std::abs(b); });
  pr.classification = rate_classify(pr.error, rep.xi, mode, tol);
  rep.tau = pr.tau;
  rep.probes.push_back(std::move(pr));
  fill_implications(rep);
  return rep;
}

DecompositionCheck decomposition_check(const OperatorFamily& family, const TestSystem& system,
                                       const OrliczModular& rho, const LipschitzProbe& probe,
                                       double tau, double m, std::size_t w) {
  const FunctionSample& f = probe.f;
  const Grid& grid = f.grid();
  DecompositionCheck out;
  out.lhs = rho(tau * (family.apply(w, f) - f));

  std::vector<double> tp(grid.size());
  for (std::size_t s = 0; s < grid.size(); ++s) tp[s] = family.value_at(w, system.p_sample(s), s);
  const FunctionSample moment = FunctionSample::from_values(f.grid_ptr(), std::move(tp));
  const FunctionSample& e0 = system.e.front();
  out.rhs = rho((2.0 * tau * probe.c2 / system.c1) * moment) +
            rho((2.0 * tau * m) * (family.apply(w, e0) - e0));
  return out;
}

RhoStarReport check_rho_star(const OperatorFamily& family, const OrliczModular& rho,
                             const std::vector<FunctionSample>& probes, const ConvergenceMode& mode,
                             const std::vector<double>& tau_list, std::size_t horizon,
                             const Tolerances& tol) {
  if (probes.empty() || tau_list.empty())
    throw Error(ErrorKind::invalid_argument, "rho-star needs probes and tau values");
  RhoStarReport rep;
  rep.e_est = 0.0;
  for (const auto& f : probes) {
    for (double tau : tau_list) {
      const double den = rho(tau * f);
      if (!(den > 0.0)) throw Error(ErrorKind::zero_denominator, "rho[tau f] vanishes");
      std::vector<double> ratio(horizon);
      parallel_for(horizon, [&](std::size_t k) { ratio[k] = rho(tau * family.apply(k + 1, f)) / den; });
      Net net = Net::from_values(std::move(ratio));
      rep.e_est = std::max(rep.e_est, filter_limsup_liminf(net, mode, tol).limsup);
      rep.ratios.push_back(std::move(net));
    }
  }
  rep.holds = std::isfinite(rep.e_est);
  return rep;
}

}  // namespace korovkin
