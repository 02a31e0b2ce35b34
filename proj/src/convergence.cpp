#include "korovkin/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "korovkin/error.hpp"
#include "korovkin/numeric.hpp"

namespace korovkin {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::shared_ptr<const std::vector<double>> compute_column_weights(const SummabilityMatrix& a,
                                                                  const ShapeFunction& shape,
                                                                  std::size_t horizon) {
  const std::size_t tb = tail_begin(horizon);
  const double rows = static_cast<double>(horizon - tb + 1);
  std::vector<KahanSum> acc(horizon);
  for (std::size_t i = tb; i <= horizon; ++i) {
    const std::size_t bound = row_scan_bound(a, shape, i);
    if (bound > horizon) {
      // Entries beyond the horizon would need x_j for j > horizon.
      for (std::size_t j = horizon + 1; j <= bound; ++j) {
        if (shape.psi(i, j) >= 0.0 && a.entry(i, j) != 0.0) {
          throw Error(ErrorKind::horizon_too_small,
                      "row " + std::to_string(i) + " of " + a.name + " reaches past the horizon");
        }
      }
    }
    for (std::size_t j = 1; j <= std::min(bound, horizon); ++j) {
      if (shape.psi(i, j) >= 0.0) acc[j - 1] += a.entry(i, j);
    }
  }
  auto weights = std::make_shared<std::vector<double>>(horizon);
  for (std::size_t j = 0; j < horizon; ++j) (*weights)[j] = acc[j].value() / rows;
  return weights;
}

void require_filter_members(const DensityFilterMode& m, std::size_t horizon) {
  std::size_t count = 0;
  for (std::size_t w = 1; w <= horizon; ++w) count += m.member(w) ? 1 : 0;
  if (2 * count < horizon) {
    throw Error(ErrorKind::invalid_argument,
                "filter set " + m.name + " has only " + std::to_string(count) +
                    " members up to " + std::to_string(horizon));
  }
}

void require_psi_horizon(const PsiAStatisticalMode& m, const Net& x) {
  if (x.horizon() != m.horizon) {
    throw Error(ErrorKind::horizon_mismatch, "net horizon " + std::to_string(x.horizon()) +
                                                 " vs mode horizon " + std::to_string(m.horizon));
  }
}

void validate_schedule(const std::vector<double>& eps) {
  if (eps.empty()) throw Error(ErrorKind::invalid_argument, "empty eps schedule");
  for (std::size_t k = 0; k < eps.size(); ++k) {
    if (!(eps[k] > 0.0) || !std::isfinite(eps[k]))
      throw Error(ErrorKind::invalid_argument, "eps must be positive and finite");
    if (k > 0 && !(eps[k] < eps[k - 1]))
      throw Error(ErrorKind::invalid_argument, "eps schedule must be decreasing");
  }
}

}  // namespace

ConvergenceMode ConvergenceMode::ordinary() { return ConvergenceMode(OrdinaryMode{}); }
ConvergenceMode ConvergenceMode::frechet() { return ConvergenceMode(FrechetMode{}); }

ConvergenceMode ConvergenceMode::density_filter(std::string name,
                                                std::function<bool(std::size_t)> member) {
  return ConvergenceMode(DensityFilterMode{std::move(name), std::move(member)});
}

ConvergenceMode ConvergenceMode::non_squares() {
  return density_filter("non-squares", [](std::size_t w) { return !is_perfect_square(w); });
}

ConvergenceMode ConvergenceMode::psi_a_statistical(SummabilityMatrix matrix, ShapeFunction shape,
                                                   std::size_t horizon, const Tolerances& tol) {
  auto mode = psi_a_statistical_unchecked(std::move(matrix), std::move(shape), horizon, tol);
  const auto& m = std::get<PsiAStatisticalMode>(mode.variant_);
  if (!m.axioms.all()) {
    std::string failed;
    if (!m.axioms.a1) failed += " (A1)";
    if (!m.axioms.a2) failed += " (A2)";
    if (!m.axioms.a3) failed += " (A3)";
    throw Error(ErrorKind::axioms_failed, m.matrix.name + " at horizon " +
                                              std::to_string(horizon) + ":" + failed + " fails");
  }
  return mode;
}

ConvergenceMode ConvergenceMode::psi_a_statistical_unchecked(SummabilityMatrix matrix,
                                                             ShapeFunction shape,
                                                             std::size_t horizon,
                                                             const Tolerances& tol) {
  PsiAStatisticalMode m;
  m.axioms = check_summability_axioms(matrix, shape, horizon, tol);
  m.column_weights = compute_column_weights(matrix, shape, horizon);
  m.matrix = std::move(matrix);
  m.shape = std::move(shape);
  m.horizon = horizon;
  return ConvergenceMode(std::move(m));
}

ConvergenceMode ConvergenceMode::almost(std::size_t m_max) {
  return ConvergenceMode(AlmostMode{m_max});
}

std::string ConvergenceMode::name() const {
  return std::visit(
      overloaded{[](const OrdinaryMode&) { return std::string("ordinary"); },
                 [](const FrechetMode&) { return std::string("frechet"); },
                 [](const DensityFilterMode& m) { return "density-filter(" + m.name + ")"; },
                 [](const PsiAStatisticalMode& m) {
                   return "psi-a-statistical(" + m.matrix.name + "," + m.shape.name + ")";
                 },
                 [](const AlmostMode& m) { return "almost(" + std::to_string(m.m_max) + ")"; }},
      variant_);
}

FilterWindow filter_window(const Net& x, const ConvergenceMode& mode, const Tolerances& tol) {
  FilterWindow window;
  const std::size_t h = x.horizon();
  const std::size_t tb = tail_begin(h);
  std::visit(
      overloaded{
          [&](const OrdinaryMode&) {
            if (x.kind() == IndexKind::Pair) {
              for (std::size_t i = tb; i <= h; ++i)
                for (std::size_t j = tb; j <= h; ++j) window.points.push_back({x(i, j), 1.0});
            } else {
              for (std::size_t w = tb; w <= h; ++w) window.points.push_back({x(w), 1.0});
            }
          },
          [&](const FrechetMode&) {
            const Net d = x.diagonal();
            for (std::size_t w = tb; w <= h; ++w) window.points.push_back({d(w), 1.0});
          },
          [&](const DensityFilterMode& m) {
            require_filter_members(m, h);
            const Net d = x.diagonal();
            for (std::size_t w = tb; w <= h; ++w)
              if (m.member(w)) window.points.push_back({d(w), 1.0});
          },
          [&](const PsiAStatisticalMode& m) {
            require_psi_horizon(m, x);
            window.small_threshold = tol.density_tol;
            if (x.kind() == IndexKind::Single) {
              const auto& wts = *m.column_weights;
              for (std::size_t j = 1; j <= h; ++j)
                if (wts[j - 1] != 0.0) window.points.push_back({x(j), wts[j - 1]});
            } else {
              const double rows = static_cast<double>(h - tb + 1);
              for (std::size_t i = tb; i <= h; ++i) {
                const std::size_t bound = std::min(row_scan_bound(m.matrix, m.shape, i), h);
                for (std::size_t j = 1; j <= bound; ++j) {
                  if (m.shape.psi(i, j) < 0.0) continue;
                  const double aij = m.matrix.entry(i, j);
                  if (aij != 0.0) window.points.push_back({x(i, j), aij / rows});
                }
              }
            }
          },
          [&](const AlmostMode&) {
            throw Error(ErrorKind::unsupported,
                        "almost convergence is not generated by a filter window");
          }},
      mode.variant());
  return window;
}

double window_measure(const FilterWindow& window, const std::function<bool(double)>& pred) {
  KahanSum sum;
  for (const auto& p : window.points)
    if (pred(p.value)) sum += p.weight;
  return sum.value();
}

LimitReport mode_limit(const Net& x, const ConvergenceMode& mode, double candidate,
                       const std::vector<double>& eps_schedule, const Tolerances& tol) {
  if (!std::isfinite(candidate)) throw Error(ErrorKind::non_finite, "limit candidate");
  validate_schedule(eps_schedule);

  LimitReport report;
  for (double eps : eps_schedule) {
    EpsCheck check;
    check.eps = eps;
    std::visit(
        overloaded{
            [&](const PsiAStatisticalMode& m) {
              require_psi_horizon(m, x);
              const PairPredicate exceptional = [&](std::size_t i, std::size_t j) {
                return std::abs(x.pair_value(i, j) - candidate) >= eps;
              };
              const auto density = triangular_density(exceptional, m.matrix, m.shape, x.horizon(), tol);
              check.statistic = density.estimate;
              check.threshold = tol.density_tol;
            },
            [&](const AlmostMode& m) {
              const std::size_t h = x.horizon();
              if (m.m_max >= h) {
                throw Error(ErrorKind::horizon_too_small,
                            "block length horizon - m_max must be positive");
              }
              const Net d = x.diagonal();
              const std::size_t n = h - m.m_max;
              double worst = 0.0;
              for (std::size_t shift = 0; shift <= m.m_max; ++shift) {
                KahanSum block;
                for (std::size_t w = shift + 1; w <= shift + n; ++w) block += d(w);
                worst = std::max(worst, std::abs(block.value() / static_cast<double>(n) - candidate));
              }
              check.statistic = worst;
              check.threshold = eps;
            },
            [&](const auto&) {
              const FilterWindow window = filter_window(x, mode, tol);
              check.statistic = window_measure(
                  window, [&](double v) { return std::abs(v - candidate) > eps; });
              check.threshold = window.small_threshold;
            }},
        mode.variant());
    check.passed = check.statistic <= check.threshold;
    report.checks.push_back(check);
  }

  report.converges = std::all_of(report.checks.begin(), report.checks.end(),
                                 [](const EpsCheck& c) { return c.passed; });
  auto failing = std::find_if(report.checks.begin(), report.checks.end(),
                              [](const EpsCheck& c) { return !c.passed; });
  report.worst = failing != report.checks.end() ? *failing : report.checks.back();
  return report;
}

LimsupLiminf filter_limsup_liminf(const Net& x, const ConvergenceMode& mode, const Tolerances& tol) {
  const FilterWindow window = filter_window(x, mode, tol);
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (window.points.empty()) return {-inf, inf};

  double vmin = inf;
  double vmax = -inf;
  for (const auto& p : window.points) {
    vmin = std::min(vmin, p.value);
    vmax = std::max(vmax, p.value);
  }
  const double thr = window.small_threshold;

  // b ∈ B  iff  {x <= b} is not large  iff  {x > b} is not small.
  auto in_b = [&](double b) { return window_measure(window, [b](double v) { return v > b; }) > thr; };
  // a ∈ A  iff  {x >= a} is not large  iff  {x < a} is not small.
  auto in_a = [&](double a) { return window_measure(window, [a](double v) { return v < a; }) > thr; };

  LimsupLiminf out{-inf, inf};
  {
    double lo = vmin - 1.0;
    double hi = vmax + 1.0;
    if (in_b(lo)) {
      for (int it = 0; it < kBisectionIterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        (in_b(mid) ? lo : hi) = mid;
      }
      out.limsup = 0.5 * (lo + hi);
    }
  }
  {
    double lo = vmin - 1.0;
    double hi = vmax + 1.0;
    if (in_a(hi)) {
      for (int it = 0; it < kBisectionIterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        (in_a(mid) ? hi : lo) = mid;
      }
      out.liminf = 0.5 * (lo + hi);
    }
  }
  return out;
}

std::optional<double> filter_limit(const Net& x, const ConvergenceMode& mode, const Tolerances& tol) {
  const auto [ls, li] = filter_limsup_liminf(x, mode, tol);
  if (!std::isfinite(ls) || !std::isfinite(li)) return std::nullopt;
  if (std::abs(ls - li) > tol.level_tol) return std::nullopt;
  return 0.5 * (ls + li);
}

}  // namespace korovkin
