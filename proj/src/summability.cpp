#include "korovkin/summability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "korovkin/error.hpp"
#include "korovkin/numeric.hpp"

namespace korovkin {

double cesaro_entry(std::size_t i, std::size_t j) {
  return j <= i ? 1.0 / static_cast<double>(i) : 0.0;
}

double degenerate_entry(std::size_t i, std::size_t j) {
  const double di = static_cast<double>(i);
  return j <= i * i ? 1.0 / (di * di) : 0.0;
}

SummabilityMatrix SummabilityMatrix::cesaro() {
  return {"cesaro", cesaro_entry, [](std::size_t i) { return i; }};
}

SummabilityMatrix SummabilityMatrix::degenerate() {
  return {"degenerate", degenerate_entry, [](std::size_t i) { return i * i; }};
}

SummabilityMatrix SummabilityMatrix::identity() {
  return {"identity", [](std::size_t i, std::size_t j) { return i == j ? 1.0 : 0.0; },
          [](std::size_t i) { return i; }};
}

namespace {
std::size_t band_width(std::size_t i) {
  auto l = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(i))));
  return std::max<std::size_t>(1, l);
}
}  // namespace

SummabilityMatrix SummabilityMatrix::sqrt_band() {
  return {"sqrt-band",
          [](std::size_t i, std::size_t j) {
            const std::size_t l = band_width(i);
            return (j <= i && j + l > i) ? 1.0 / static_cast<double>(l) : 0.0;
          },
          [](std::size_t i) { return i; }};
}

ShapeFunction ShapeFunction::triangular() {
  return {"triangular",
          [](std::size_t i, std::size_t j) {
            return static_cast<double>(i) - static_cast<double>(j);
          },
          [](std::size_t i) { return i; }};
}

ShapeFunction ShapeFunction::full() {
  return {"full", [](std::size_t, std::size_t) { return 0.0; }, nullptr};
}

std::size_t row_scan_bound(const SummabilityMatrix& a, const ShapeFunction& shape, std::size_t i) {
  std::size_t bound = a.row_support(i);
  if (shape.nonnegative_bound) bound = std::min(bound, shape.nonnegative_bound(i));
  return bound;
}

double restricted_row_sum(const SummabilityMatrix& a, const ShapeFunction& shape, std::size_t i) {
  KahanSum sum;
  const std::size_t bound = row_scan_bound(a, shape, i);
  for (std::size_t j = 1; j <= bound; ++j) {
    if (shape.psi(i, j) >= 0.0) sum += a.entry(i, j);
  }
  return sum.value();
}

AxiomReport check_summability_axioms(const SummabilityMatrix& a, const ShapeFunction& shape,
                                     std::size_t i_max, const Tolerances& tol) {
  if (i_max < kMinAxiomHorizon) {
    throw Error(ErrorKind::horizon_too_small,
                "axiom checks need i_max >= " + std::to_string(kMinAxiomHorizon));
  }
  AxiomReport report;
  report.i_max = i_max;
  const std::size_t tb = tail_begin(i_max);

  double max_sum = 0.0;
  double tail_min = std::numeric_limits<double>::infinity();
  bool a1 = true;
  for (std::size_t i = 1; i <= i_max; ++i) {
    const double s = restricted_row_sum(a, shape, i);
    max_sum = std::max(max_sum, s);
    if (s > 1.0 + kRowSumSlack) a1 = false;
    if (i >= tb) tail_min = std::min(tail_min, s);
  }
  report.a1 = a1;
  report.a1_max_row_sum = max_sum;
  report.a2_estimate = tail_min;
  report.a2 = tail_min >= tol.a2_tol;

  report.a3_probes = {1, 2, (i_max + 3) / 4};
  bool a3 = true;
  for (std::size_t j : report.a3_probes) {
    if (a.entry(i_max, j) > tol.a3_tol) a3 = false;
    for (std::size_t i = tb; i < i_max; ++i) {
      if (a.entry(i + 1, j) > a.entry(i, j) + 1e-15) {
        a3 = false;
        break;
      }
    }
  }
  report.a3 = a3;
  return report;
}

DensityReport triangular_density(const PairPredicate& k, const SummabilityMatrix& a,
                                 const ShapeFunction& shape, std::size_t i_max,
                                 const Tolerances& tol) {
  if (i_max < kMinAxiomHorizon) {
    throw Error(ErrorKind::horizon_too_small,
                "density needs i_max >= " + std::to_string(kMinAxiomHorizon));
  }
  DensityReport report;
  report.partial_sums.reserve(i_max);
  for (std::size_t i = 1; i <= i_max; ++i) {
    KahanSum in_k;
    KahanSum row;
    const std::size_t bound = row_scan_bound(a, shape, i);
    for (std::size_t j = 1; j <= bound; ++j) {
      if (shape.psi(i, j) < 0.0) continue;
      const double aij = a.entry(i, j);
      row += aij;
      if (aij != 0.0 && k(i, j)) in_k += aij;
    }
    if (row.value() > 1.0 + kRowSumSlack) {
      throw Error(ErrorKind::axioms_failed,
                  "row " + std::to_string(i) + " violates (A1) in matrix " + a.name);
    }
    report.partial_sums.emplace_back(i, in_k.value());
  }

  const std::size_t tb = tail_begin(i_max);
  KahanSum tail;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = tb; i <= i_max; ++i) {
    const double s = report.partial_sums[i - 1].second;
    tail += s;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  report.estimate = tail.value() / static_cast<double>(i_max - tb + 1);
  report.oscillation = hi - lo;
  report.converged = report.oscillation <= tol.density_tol;
  return report;
}

}  // namespace korovkin
