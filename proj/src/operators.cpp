#include "korovkin/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <string>

#include "korovkin/error.hpp"
#include "korovkin/numeric.hpp"

namespace korovkin {

// ---------------------------------------------------------------- Mellin

MellinParams::MellinParams() : in_f([](std::size_t w) { return !is_perfect_square(w); }) {}

void MellinParams::validate() const {
  if (dimension < 1) throw Error(ErrorKind::invalid_argument, "Mellin dimension must be >= 1");
  if (!in_f) throw Error(ErrorKind::invalid_argument, "Mellin set F is not given");
  if (quadrature_points < 2) throw Error(ErrorKind::invalid_argument, "too few quadrature points");
  std::size_t members = 0;
  for (std::size_t w = 1; w <= w_range; ++w) members += in_f(w) ? 1 : 0;
  if (members < 2 || w_range - members < 2)
    throw Error(ErrorKind::invalid_argument,
                "F and its complement need at least two members up to the horizon");
}

namespace {

void require_unit_box(const Grid& g, std::size_t dimension) {
  if (g.region().kind != RegionKind::Box || g.dimension() != dimension)
    throw Error(ErrorKind::wrong_region, "Mellin operators act on [0,1]^" + std::to_string(dimension));
  for (const auto& a : g.region().axes)
    if (a.lo != 0.0 || a.hi != 1.0)
      throw Error(ErrorKind::wrong_region, "Mellin operators act on the unit box");
}

double mellin_normalization(std::size_t w, const MellinParams& p) {
  const double base = static_cast<double>(w) + 1.0;
  const auto exponent = static_cast<int>(p.in_f(w) ? p.dimension : p.dimension + 1);
  return std::pow(base, exponent);
}

/// Tensor Gauss-Jacobi sum of f(s ⊙ t), times the kernel normalization.
double mellin_at(const FunctionSample& f, std::span<const double> s, const QuadratureRule& rule,
                 double normalization) {
  const std::size_t dim = s.size();
  const std::size_t n = rule.nodes.size();
  std::vector<std::size_t> idx(dim, 0);
  std::vector<double> point(dim);
  KahanSum sum;
  while (true) {
    double weight = 1.0;
    for (std::size_t d = 0; d < dim; ++d) {
      point[d] = s[d] * rule.nodes[idx[d]];
      weight *= rule.weights[idx[d]];
    }
    sum += weight * f.evaluate(point);
    std::size_t d = dim;
    while (d-- > 0) {
      if (++idx[d] < n) break;
      idx[d] = 0;
    }
    if (d == static_cast<std::size_t>(-1)) break;
  }
  return normalization * sum.value();
}

void require_index(std::size_t w, std::size_t w_range, const char* what) {
  if (w < 1 || w > w_range)
    throw Error(ErrorKind::out_of_range,
                std::string(what) + " index " + std::to_string(w) + " outside [1, " +
                    std::to_string(w_range) + "]");
}

}  // namespace

FunctionSample mellin_apply(const FunctionSample& f, std::size_t w, const MellinParams& params) {
  params.validate();
  require_unit_box(f.grid(), params.dimension);
  require_index(w, params.w_range, "Mellin");
  const QuadratureRule rule = gauss_jacobi_unit(params.quadrature_points, static_cast<double>(w));
  const double norm = mellin_normalization(w, params);
  std::vector<double> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = mellin_at(f, f.grid().node(k), rule, norm);
  return FunctionSample::from_values(f.grid_ptr(), std::move(out));
}

OperatorFamily mellin_family(const MellinParams& params) {
  params.validate();
  auto rules = std::make_shared<std::vector<QuadratureRule>>();
  rules->reserve(params.w_range);
  for (std::size_t w = 1; w <= params.w_range; ++w)
    rules->push_back(gauss_jacobi_unit(params.quadrature_points, static_cast<double>(w)));

  OperatorFamily family;
  family.name = "mellin(N=" + std::to_string(params.dimension) + ",F=" + params.f_name + ")";
  family.positivity_declared = true;
  family.domain_note = "continuous functions on [0,1]^" + std::to_string(params.dimension);
  family.apply_at = [params, rules](std::size_t w, const FunctionSample& f, std::size_t node) {
    require_unit_box(f.grid(), params.dimension);
    require_index(w, params.w_range, "Mellin");
    return mellin_at(f, f.grid().node(node), (*rules)[w - 1], mellin_normalization(w, params));
  };
  family.apply = [at = family.apply_at](std::size_t w, const FunctionSample& f) {
    std::vector<double> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) out[k] = at(w, f, k);
    return FunctionSample::from_values(f.grid_ptr(), std::move(out));
  };
  return family;
}

double mellin_error_closed_form(MellinTag tag, std::size_t w, const MellinParams& params) {
  if (w < 1) throw Error(ErrorKind::out_of_range, "Mellin index must be >= 1");
  const double dw = static_cast<double>(w);
  const bool in_f = params.in_f(w);
  switch (tag) {
    case MellinTag::e0: return in_f ? 0.0 : dw;
    case MellinTag::er:
      if (!in_f) throw Error(ErrorKind::invalid_argument, "moment errors are stated for w in F");
      return 1.0 / (dw + 2.0);
    case MellinTag::er2:
      if (!in_f) throw Error(ErrorKind::invalid_argument, "moment errors are stated for w in F");
      return 2.0 / (dw + 3.0);
  }
  throw Error(ErrorKind::invalid_argument, "unknown Mellin tag");
}

// ----------------------------------------------------------- Kantorovich

KantorovichParams::KantorovichParams() : gate([](std::size_t n) { return is_perfect_square(n); }) {}

void KantorovichParams::validate(const Tolerances&) const {
  if (n_range < 1 || n_range > kKantorovichMaxN)
    throw Error(ErrorKind::out_of_range, "Kantorovich horizon outside [1, 400]");
  if (!gate) throw Error(ErrorKind::invalid_argument, "gating set is not given");
  // A density-zero set cannot be certified on a finite range; reject sets
  // covering half of the last quarter or more.
  const std::size_t tb = tail_begin(n_range);
  if (tb > n_range) return;
  std::size_t members = 0;
  for (std::size_t n = tb; n <= n_range; ++n) members += gate(n) ? 1 : 0;
  if (2 * members >= n_range - tb + 1)
    throw Error(ErrorKind::invalid_argument, "gating set " + gate_name + " is not sparse");
}

namespace {

void require_simplex(const Grid& g) {
  if (g.region().kind != RegionKind::Simplex2)
    throw Error(ErrorKind::wrong_region, "Kantorovich operators act on the unit simplex");
}

struct KantorovichCells {
  std::size_t n;
  std::vector<double> log_factorial;  // log m! for m = 0..n
  std::vector<double> cell_mean;      // mean of f over cell (k, j), packed by k then j
};

KantorovichCells kantorovich_cells(const FunctionSample& f, std::size_t n) {
  if (n < 1 || n > kKantorovichMaxN)
    throw Error(ErrorKind::out_of_range, "Kantorovich index outside [1, 400]");
  require_simplex(f.grid());
  KantorovichCells cells{n, {}, {}};
  cells.log_factorial.resize(n + 1);
  for (std::size_t m = 0; m <= n; ++m) cells.log_factorial[m] = std::lgamma(static_cast<double>(m) + 1.0);
  const double h = 1.0 / static_cast<double>(n + 1);
  double point[2];
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; k + j <= n; ++j) {
      KahanSum s;
      for (double du : {0.25, 0.75}) {
        for (double dv : {0.25, 0.75}) {
          point[0] = (static_cast<double>(k) + du) * h;
          point[1] = (static_cast<double>(j) + dv) * h;
          s += f.evaluate(point);
        }
      }
      cells.cell_mean.push_back(0.25 * s.value());
    }
  }
  return cells;
}

double kantorovich_at(const KantorovichCells& cells, std::span<const double> xy) {
  const std::size_t n = cells.n;
  const double x = std::max(0.0, xy[0]);
  const double y = std::max(0.0, xy[1]);
  const double z = std::max(0.0, 1.0 - x - y);
  const double lx = std::log(x);
  const double ly = std::log(y);
  const double lz = std::log(z);
  const auto& lf = cells.log_factorial;
  KahanSum sum;
  std::size_t packed = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; k + j <= n; ++j, ++packed) {
      const std::size_t rest = n - k - j;
      double lp = lf[n] - lf[k] - lf[j] - lf[rest];
      if (k > 0) lp += static_cast<double>(k) * lx;
      if (j > 0) lp += static_cast<double>(j) * ly;
      if (rest > 0) lp += static_cast<double>(rest) * lz;
      if (lp == -std::numeric_limits<double>::infinity()) continue;
      sum += std::exp(lp) * cells.cell_mean[packed];
    }
  }
  return sum.value();
}

}  // namespace

FunctionSample kantorovich_apply(const FunctionSample& f, std::size_t n) {
  const KantorovichCells cells = kantorovich_cells(f, n);
  std::vector<double> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = kantorovich_at(cells, f.grid().node(k));
  return FunctionSample::from_values(f.grid_ptr(), std::move(out));
}

double kantorovich_apply_at(const FunctionSample& f, std::size_t n, std::size_t node) {
  return kantorovich_at(kantorovich_cells(f, n), f.grid().node(node));
}

OperatorFamily kantorovich_family(std::size_t n_range) {
  OperatorFamily family;
  family.name = "kantorovich";
  family.positivity_declared = true;
  family.domain_note = "locally integrable functions on [0,1]^2, evaluated on the simplex";
  family.apply = [n_range](std::size_t n, const FunctionSample& f) {
    require_index(n, n_range, "Kantorovich");
    return kantorovich_apply(f, n);
  };
  family.apply_at = [n_range](std::size_t n, const FunctionSample& f, std::size_t node) {
    require_index(n, n_range, "Kantorovich");
    return kantorovich_apply_at(f, n, node);
  };
  return family;
}

// --------------------------------------------------------------- generic

OperatorFamily gate_family(OperatorFamily base, IndexPredicate h, std::string h_name) {
  OperatorFamily gated;
  gated.name = base.name + "*gated(" + h_name + ")";
  gated.positivity_declared = base.positivity_declared;
  gated.domain_note = base.domain_note;
  gated.apply = [apply = base.apply, h](std::size_t n, const FunctionSample& f) {
    return h(n) ? FunctionSample::zero(f.grid_ptr()) : apply(n, f);
  };
  if (base.apply_at) {
    gated.apply_at = [at = base.apply_at, h](std::size_t n, const FunctionSample& f, std::size_t node) {
      return h(n) ? 0.0 : at(n, f, node);
    };
  }
  return gated;
}

OperatorFamily identity_family() {
  OperatorFamily family;
  family.name = "identity";
  family.domain_note = "any sample";
  family.apply = [](std::size_t, const FunctionSample& f) {
    return FunctionSample::from_values(f.grid_ptr(), {f.values().begin(), f.values().end()});
  };
  family.apply_at = [](std::size_t, const FunctionSample& f, std::size_t node) { return f[node]; };
  return family;
}

OperatorFamily zero_family() {
  OperatorFamily family;
  family.name = "zero";
  family.domain_note = "any sample";
  family.apply = [](std::size_t, const FunctionSample& f) { return FunctionSample::zero(f.grid_ptr()); };
  family.apply_at = [](std::size_t, const FunctionSample&, std::size_t) { return 0.0; };
  return family;
}

OperatorFamily negated_identity_family() {
  OperatorFamily family;
  family.name = "negated-identity";
  family.positivity_declared = false;
  family.domain_note = "any sample";
  family.apply = [](std::size_t, const FunctionSample& f) {
    std::vector<double> v(f.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = -f[k];
    return FunctionSample::from_values(f.grid_ptr(), std::move(v));
  };
  return family;
}

PositivityReport check_positivity_set(const OperatorFamily& family, const GridPtr& grid,
                                      std::size_t w_max, std::size_t trials, std::uint64_t seed,
                                      const Tolerances& tol) {
  if (trials < 10) throw Error(ErrorKind::invalid_argument, "positivity check needs >= 10 trials");
  if (w_max < 1) throw Error(ErrorKind::invalid_argument, "w_max must be >= 1");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const std::size_t dim = grid->dimension();
  std::vector<FunctionSample> probes;
  probes.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    // Σ_q (c_q + <b_q, x>)^2 with three affine terms.
    std::vector<double> c(3);
    std::vector<double> b(3 * dim);
    for (auto& v : c) v = coef(rng);
    for (auto& v : b) v = coef(rng);
    probes.push_back(FunctionSample::from_field(grid, [c, b, dim](std::span<const double> x) {
      double s = 0.0;
      for (std::size_t q = 0; q < 3; ++q) {
        double a = c[q];
        for (std::size_t d = 0; d < dim; ++d) a += b[q * dim + d] * x[d];
        s += a * a;
      }
      return s;
    }));
  }

  std::vector<char> ok(w_max, 1);
  parallel_for(w_max, [&](std::size_t k) {
    const std::size_t w = k + 1;
    for (const auto& p : probes) {
      const FunctionSample out = family.apply(w, p);
      for (double v : out.values()) {
        if (v < -1e-8) {
          ok[k] = 0;
          return;
        }
      }
    }
  });

  PositivityReport report;
  for (std::size_t w = 1; w <= w_max; ++w)
    if (ok[w - 1]) report.positive.push_back(w);
  report.complement_density =
      static_cast<double>(w_max - report.positive.size()) / static_cast<double>(w_max);
  report.complement_small = report.complement_density <= tol.density_tol;
  return report;
}

}  // namespace korovkin
