#include <doctest.h>

#include <cmath>
#include <random>

#include "korovkin/convergence.hpp"
#include "korovkin/numeric.hpp"
#include "korovkin/operators.hpp"
#include "support.hpp"

using namespace korovkin;

namespace {

double sup_err(const FunctionSample& a, const FunctionSample& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

FunctionSample coord(const GridPtr& g, std::size_t d) {
  return FunctionSample::from_field(g, [d](std::span<const double> t) { return t[d]; });
}

MellinParams mellin(std::size_t dim, std::size_t range = 60) {
  MellinParams p;
  p.dimension = dim;
  p.w_range = range;
  return p;
}

}  // namespace

TEST_CASE("Mellin preserves constants on F and scales them by w+1 off F") {
  const auto g = build_grid(Region::unit_box(1), 21, NodeLayout::Lattice);
  const auto e0 = FunctionSample::constant(g, 1.0);
  const auto p = mellin(1);
  for (std::size_t w = 1; w <= 50; ++w) {
    const auto out = mellin_apply(e0, w, p);
    const double target = is_perfect_square(w) ? w + 1.0 : 1.0;
    for (double v : out.values()) REQUIRE(std::abs(v - target) <= 1e-10 * target);
  }
}

TEST_CASE("Mellin first moment at s = 1") {
  const auto g = build_grid(Region::unit_box(1), 11, NodeLayout::Lattice);
  const auto out = mellin_apply(coord(g, 0), 2, mellin(1));
  CHECK(std::abs(out[g->size() - 1] - 0.75) <= 1e-8);
}

TEST_CASE("Mellin moments match (w+1)/(w+2) for every coordinate") {
  for (std::size_t dim : {1, 2}) {
    const auto g = build_grid(Region::unit_box(dim), dim == 1 ? 33 : 9, NodeLayout::Lattice);
    const auto family = mellin_family(mellin(dim));
    for (std::size_t w = 1; w <= 50; ++w) {
      if (is_perfect_square(w)) continue;
      for (std::size_t r = 0; r < dim; ++r) {
        const auto er = coord(g, r);
        const auto out = family.apply(w, er);
        const double c = (w + 1.0) / (w + 2.0);
        for (std::size_t k = 0; k < g->size(); ++k) REQUIRE(std::abs(out[k] - c * er[k]) <= 1e-8);
      }
    }
  }
}

TEST_CASE("Mellin closed-form errors") {
  const MellinParams p;
  CHECK(mellin_error_closed_form(MellinTag::e0, 7, p) == 0.0);
  CHECK(mellin_error_closed_form(MellinTag::e0, 9, p) == 9.0);
  CHECK(mellin_error_closed_form(MellinTag::er, 2, p) == 0.25);
  CHECK(mellin_error_closed_form(MellinTag::er2, 3, p) == doctest::Approx(1.0 / 3.0));
  CHECK(error_kind([&] { mellin_error_closed_form(MellinTag::er, 4, p); }) == ErrorKind::invalid_argument);
}

TEST_CASE("Mellin argument checks") {
  const auto g = build_grid(Region::unit_box(1), 8);
  const auto f = FunctionSample::constant(g, 1.0);
  CHECK(error_kind([&] { mellin_apply(f, 0, mellin(1)); }) == ErrorKind::out_of_range);
  CHECK(error_kind([&] { mellin_apply(f, 61, mellin(1)); }) == ErrorKind::out_of_range);
  CHECK(error_kind([&] { mellin_apply(f, 2, mellin(2)); }) == ErrorKind::wrong_region);
  const auto shifted = build_grid(Region::box({{0.0, 2.0}}), 8);
  CHECK(error_kind([&] { mellin_apply(FunctionSample::constant(shifted, 1.0), 2, mellin(1)); }) ==
        ErrorKind::wrong_region);
  MellinParams all_f = mellin(1);
  all_f.in_f = [](std::size_t) { return true; };
  CHECK(error_kind([&] { all_f.validate(); }) == ErrorKind::invalid_argument);
}

TEST_CASE("Kantorovich reproduces constants") {
  const auto g = build_grid(Region::simplex2(), 10, NodeLayout::Lattice);
  for (std::size_t n : {1, 5, 49, 400}) {
    const auto out = kantorovich_apply(FunctionSample::constant(g, 1.0), n);
    for (double v : out.values()) REQUIRE(std::abs(v - 1.0) <= 1e-8);
  }
}

TEST_CASE("Kantorovich first moments") {
  const auto g = build_grid(Region::simplex2(), 10, NodeLayout::Lattice);
  const auto e1 = coord(g, 0);
  const auto e2 = coord(g, 1);
  CHECK(std::abs(kantorovich_apply_at(e1, 1, 0) - 0.25) <= 1e-6);
  for (std::size_t n : {1, 9, 49}) {
    const auto p1 = kantorovich_apply(e1, n);
    const auto p2 = kantorovich_apply(e2, n);
    // Oracle: P_n e1 = (2 n x + 1) / (2 (n + 1)).
    for (std::size_t k = 0; k < g->size(); ++k) {
      const double x = g->node(k)[0];
      REQUIRE(p1[k] == doctest::Approx((2.0 * n * x + 1.0) / (2.0 * (n + 1.0))).epsilon(1e-12));
    }
    CHECK(std::abs(sup_err(p1, e1) - 1.0 / (2.0 * (n + 1))) <= 1e-4);
    CHECK(std::abs(sup_err(p2, e2) - 1.0 / (2.0 * (n + 1))) <= 1e-4);
  }
}

TEST_CASE("Kantorovich second moment error decays like 1/n") {
  const auto g = build_grid(Region::simplex2(), 12, NodeLayout::Lattice);
  const auto e3 = FunctionSample::from_field(g, [](std::span<const double> t) { return t[0] * t[0] + t[1] * t[1]; });
  double lo = INFINITY;
  double hi = 0.0;
  for (std::size_t n = 10; n <= 100; n += 10) {
    const double c = n * sup_err(kantorovich_apply(e3, n), e3);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  CHECK(lo > 0.0);
  CHECK(hi / lo <= 2.0);
}

TEST_CASE("Kantorovich argument checks") {
  const auto box = build_grid(Region::unit_box(2), 6);
  const auto tri = build_grid(Region::simplex2(), 6);
  CHECK(error_kind([&] { kantorovich_apply(FunctionSample::constant(box, 1.0), 3); }) == ErrorKind::wrong_region);
  CHECK(error_kind([&] { kantorovich_apply(FunctionSample::constant(tri, 1.0), 0); }) == ErrorKind::out_of_range);
  CHECK(error_kind([&] { kantorovich_apply(FunctionSample::constant(tri, 1.0), 401); }) == ErrorKind::out_of_range);
  KantorovichParams dense;
  dense.gate = [](std::size_t n) { return n % 2 == 0; };
  CHECK(error_kind([&] { dense.validate(); }) == ErrorKind::invalid_argument);
  CHECK_NOTHROW(KantorovichParams{}.validate());
}

TEST_CASE("gating zeroes the operator on H") {
  const auto g = build_grid(Region::simplex2(), 6, NodeLayout::Lattice);
  const auto one = FunctionSample::constant(g, 1.0);
  const KantorovichParams kp;
  const auto gated = gate_family(kantorovich_family(), kp.gate, kp.gate_name);
  const auto at4 = gated.apply(4, one);
  const auto at5 = gated.apply(5, one);
  for (double v : at4.values()) CHECK(v == 0.0);
  for (double v : at5.values()) CHECK(std::abs(v - 1.0) <= 1e-8);
  CHECK(gated.value_at(9, one, 3) == 0.0);

  const auto base = kantorovich_family();
  const auto open = gate_family(base, [](std::size_t) { return false; }, "empty");
  const auto e1 = coord(g, 0);
  for (std::size_t n : {3, 4, 16}) CHECK(sup_err(open.apply(n, e1), base.apply(n, e1)) == 0.0);
}

TEST_CASE("gated e0 error converges only along the filter") {
  const std::size_t h = 100;
  const auto g = build_grid(Region::simplex2(), 6, NodeLayout::Lattice);
  const auto one = FunctionSample::constant(g, 1.0);
  const KantorovichParams kp;
  const auto gated = gate_family(kantorovich_family(h), kp.gate, kp.gate_name);
  const Net err = Net::single(h, [&](std::size_t n) { return sup_err(gated.apply(n, one), one); });
  CHECK_FALSE(mode_limit(err, ConvergenceMode::frechet(), 0.0, {0.1, 1e-6}).converges);
  CHECK(mode_limit(err, ConvergenceMode::non_squares(), 0.0, {0.1, 1e-6}).converges);
}

TEST_CASE("property: linearity and positivity on random probe pairs") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto g1 = build_grid(Region::unit_box(1), 17, NodeLayout::Lattice);
  const auto g2 = build_grid(Region::simplex2(), 8, NodeLayout::Lattice);
  const auto mel = mellin_family(mellin(1));
  const auto kan = kantorovich_family();
  auto random_poly = [&](const GridPtr& g) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    return FunctionSample::from_field(g, [=](std::span<const double> t) {
      const double y = t.size() > 1 ? t[1] : 0.0;
      return a + b * t[0] + c * y + d * t[0] * t[0];
    });
  };
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = u(rng), beta = u(rng);
    const std::size_t w = 1 + trial * 2;
    for (const auto& [fam, g] : {std::pair{&mel, g1}, std::pair{&kan, g2}}) {
      const auto f = random_poly(g);
      const auto h = random_poly(g);
      const auto lhs = fam->apply(w, alpha * f + beta * h);
      const auto rhs = alpha * fam->apply(w, f) + beta * fam->apply(w, h);
      CHECK(sup_err(lhs, rhs) <= 1e-10);
      const auto sq_field = FunctionSample::from_field(g, [f](std::span<const double> t) {
        const double v = f.evaluate(t);
        return v * v;
      });
      const auto image = fam->apply(w, sq_field);
      for (double v : image.values()) CHECK(v >= -1e-10);
    }
  }
}

TEST_CASE("positivity set examples") {
  const auto g1 = build_grid(Region::unit_box(1), 11);
  const auto mel = check_positivity_set(mellin_family(mellin(1)), g1, 50, 10);
  CHECK(mel.positive.size() == 50);
  CHECK(mel.complement_small);

  const auto g2 = build_grid(Region::simplex2(), 6);
  const KantorovichParams kp;
  const auto gated = check_positivity_set(gate_family(kantorovich_family(), kp.gate, kp.gate_name), g2, 100, 10);
  CHECK(gated.positive.size() == 100);

  const auto neg = check_positivity_set(negated_identity_family(), g1, 10, 10);
  CHECK(neg.positive.empty());
  CHECK(neg.complement_density == 1.0);
  CHECK_FALSE(neg.complement_small);
  CHECK(error_kind([&] { check_positivity_set(identity_family(), g1, 10, 9); }) == ErrorKind::invalid_argument);
}
