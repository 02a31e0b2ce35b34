#include "korovkin/modular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "korovkin/error.hpp"
#include "korovkin/numeric.hpp"

namespace korovkin {

PhiFunction PhiFunction::power(double p) {
  PhiFunction phi{PhiFamily::Power, p};
  phi.validate();
  return phi;
}

double PhiFunction::operator()(double u) const noexcept {
  switch (family) {
    case PhiFamily::Linear: return u;
    case PhiFamily::Power: return std::pow(u, p);
    case PhiFamily::ExpM1: return std::expm1(u);
  }
  return u;
}

std::string PhiFunction::name() const {
  switch (family) {
    case PhiFamily::Linear: return "linear";
    case PhiFamily::Power: return "power(" + std::to_string(p) + ")";
    case PhiFamily::ExpM1: return "expm1";
  }
  return "unknown";
}

void PhiFunction::validate() const {
  if (family == PhiFamily::Power && !(p >= 1.0))
    throw Error(ErrorKind::invalid_argument, "power phi needs p >= 1");
  if ((*this)(0.0) != 0.0) throw Error(ErrorKind::invalid_argument, "phi(0) != 0");
  double prev = 0.0;
  for (double u : {1e-6, 1e-3, 0.1, 0.5, 1.0, 2.0, 10.0, 50.0}) {
    const double v = (*this)(u);
    if (!(v > 0.0) || v < prev) throw Error(ErrorKind::invalid_argument, name() + " is not admissible");
    prev = v;
  }
}

OrliczModular::OrliczModular(PhiFunction phi, GridPtr grid, double q)
    : phi_(phi), grid_(std::move(grid)), q_(q) {
  phi_.validate();
  if (!grid_) throw Error(ErrorKind::invalid_argument, "modular without grid");
  if (!(q_ >= 1.0)) throw Error(ErrorKind::invalid_argument, "Q must be >= 1");
}

double OrliczModular::operator()(const FunctionSample& f) const {
  if (f.grid_ptr() != grid_ && !f.grid().same_as(*grid_))
    throw Error(ErrorKind::grid_mismatch, "sample and modular use different grids");
  KahanSum sum;
  for (std::size_t k = 0; k < f.size(); ++k) sum += grid_->weight(k) * phi_(std::abs(f[k]));
  return sum.value();
}

double OrliczModular::of_constant(double c) const {
  return phi_(std::abs(c)) * grid_->total_weight();
}

double orlicz_modular(const FunctionSample& f, const OrliczModular& rho) { return rho(f); }

double modulus_of_continuity(const FunctionSample& f, double delta) {
  const Grid& g = f.grid();
  if (!(delta >= g.h_min() * (1.0 - 1e-12)))
    throw Error(ErrorKind::invalid_argument, "delta below grid spacing h_min");
  const double reach = delta * (1.0 + 1e-12);
  double best = 0.0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      if (g.node_distance(a, b) <= reach) best = std::max(best, std::abs(f[a] - f[b]));
    }
  }
  return best;
}

ModularPropertyReport check_modular_properties(const OrliczModular& rho,
                                               const std::vector<FunctionSample>& probes) {
  if (probes.empty()) throw Error(ErrorKind::invalid_argument, "no probes");
  ModularPropertyReport report;

  report.monotone = true;
  for (const auto& f : probes) {
    for (const auto& g : probes) {
      bool dominated = true;
      for (std::size_t k = 0; k < f.size() && dominated; ++k)
        dominated = std::abs(f[k]) <= std::abs(g[k]);
      if (dominated && rho(f) > rho(g) + 1e-12) report.monotone = false;
    }
  }

  for (double lambda : {0.1, 1.0, 10.0}) report.indicator_values.push_back(rho.of_constant(lambda));
  const bool all_finite = std::all_of(report.indicator_values.begin(), report.indicator_values.end(),
                                      [](double v) { return std::isfinite(v); });
  // χ_G ∈ L^ρ: ρ[λ χ_G] finite and shrinking as λ → 0.
  report.finite = std::isfinite(report.indicator_values[0]) &&
                  rho.of_constant(1e-3) < report.indicator_values[0] &&
                  rho.of_constant(1e-6) <= 1e-3 * std::max(1.0, report.indicator_values[0]);
  report.strongly_finite = report.finite && all_finite;

  report.quasi_semiconvex_ok = true;
  const double q = rho.q();
  for (const auto& probe : probes) {
    const FunctionSample f = probe.abs();
    const double rho_qf = rho(f.scaled(q));
    for (double a : {0.1, 0.5, 1.0}) {
      if (rho(f.scaled(a)) > q * a * rho_qf + 1e-12) report.quasi_semiconvex_ok = false;
    }
  }
  return report;
}

}  // namespace korovkin
