#include <doctest.h>

#include <cmath>
#include <limits>

#include "korovkin/test_system.hpp"
#include "support.hpp"

using namespace korovkin;

TEST_CASE("Euclidean identity system: P is the squared distance") {
  const auto g = build_grid(Region::unit_box(2), 6, NodeLayout::Lattice);
  const TestSystem sys = build_test_system_euclidean(PhiMap::Identity, 2, g, 0.5);
  CHECK(sys.m == 3);
  CHECK(sys.count() == 4);
  for (std::size_t k = 0; k < g->size(); ++k) CHECK(std::abs(sys.p_value(g->node(k), g->node(k))) <= 1e-10);
  const double s0[2] = {0.0, 0.0};
  const double t0[2] = {0.3, 0.4};
  CHECK(sys.p_value(s0, t0) == doctest::Approx(0.25).epsilon(1e-14));
  // e0 is the constant one and N_bound is the largest |a_r|.
  for (double v : sys.e[0].values()) CHECK(v == 1.0);
  CHECK(sys.n_bound == doctest::Approx(2.0));  // a_0 = |s|^2 = 2 at (1,1), a_i = -2 s_i
}

TEST_CASE("one-dimensional identity system") {
  const auto g = build_grid(Region::unit_box(1), 11, NodeLayout::Lattice);
  const TestSystem sys = build_test_system_euclidean(PhiMap::Identity, 1, g, 0.5);
  const double s[1] = {0.0};
  const double t[1] = {1.0};
  CHECK(sys.p_value(s, t) == doctest::Approx(1.0));
  const auto slice = sys.p_sample(0);
  CHECK(slice.has_evaluator());
  const double q[1] = {0.3};
  CHECK(slice.evaluate(q) == doctest::Approx(0.09));
}

TEST_CASE("C1 estimate is the smallest d over pairs beyond delta_min") {
  const auto g = build_grid(Region::unit_box(1), 101, NodeLayout::Lattice);
  const TestSystem sys = build_test_system_euclidean(PhiMap::Identity, 1, g, 0.5);
  const PAxiomReport rep = verify_P_axioms(sys, *g, 0.5);
  CHECK(rep.p1_ok);
  CHECK(std::abs(rep.c1_est - 0.5) <= g->h_min());
  // Oracle: pair scan of d^2 / d.
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < g->size(); ++a)
    for (std::size_t b = 0; b < g->size(); ++b) {
      const double d = std::abs(g->node(a)[0] - g->node(b)[0]);
      if (d >= 0.5) best = std::min(best, d);
    }
  CHECK(rep.c1_est == doctest::Approx(best).epsilon(1e-12));
  CHECK(sys.c1 == rep.c1_est);
  CHECK(sys.c1_delta_min == 0.5);
}

TEST_CASE("exp system satisfies (P1)") {
  const auto g = build_grid(Region::box({{0.0, 1.0}, {-0.5, 0.5}}), 7);
  const TestSystem sys = build_test_system_euclidean(PhiMap::Exp, 2, g, 0.3);
  CHECK(sys.c1 > 0.0);
  const double s[2] = {0.0, 0.0};
  const double t[2] = {1.0, 0.0};
  CHECK(sys.p_value(s, t) == doctest::Approx((1.0 - std::exp(1.0)) * (1.0 - std::exp(1.0))));
}

TEST_CASE("trig system constants") {
  const auto g = build_grid(Region::box({{0.3, 1.2}}), 1500, NodeLayout::Lattice);
  const TestSystem sys = build_test_system_trig(0.3, 1.2, g, 0.1);
  REQUIRE(sys.c0.has_value());
  CHECK(*sys.c0 == doctest::Approx(std::cos(0.9)));
  CHECK(*sys.c0 == doctest::Approx(0.62161).epsilon(1e-5));
  const double s[1] = {0.3};
  const double t[1] = {1.2};
  CHECK(sys.p_value(s, t) == doctest::Approx(1.0 - std::cos(0.9)));
  CHECK(sys.p_value(s, t) == doctest::Approx(0.37839).epsilon(1e-5));
  const PAxiomReport rep = verify_P_axioms(sys, *g, 0.1);
  CHECK(rep.p1_ok);
  REQUIRE(rep.c0_est.has_value());
  // Oracle: P''_s(t) = cos(s - t), smallest at |s - t| = 0.9.
  CHECK(std::abs(*rep.c0_est - std::cos(0.9)) <= 1e-3);
}

TEST_CASE("test system errors") {
  const auto g1 = build_grid(Region::unit_box(1), 11);
  CHECK(error_kind([&] { build_test_system_euclidean(PhiMap::Identity, 2, g1, 0.2); }) == ErrorKind::grid_mismatch);
  const auto bad = build_grid(Region::box({{0.0, 1.7}}), 11);
  CHECK(error_kind([&] { build_test_system_trig(0.0, 1.7, bad, 0.2); }) == ErrorKind::invalid_argument);
  const auto g = build_grid(Region::box({{0.3, 1.2}}), 11);
  CHECK(error_kind([&] { build_test_system_trig(0.3, 1.2, g, 0.01); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([&] { build_test_system_trig(0.3, 1.2, g, 5.0); }) == ErrorKind::invalid_argument);
}
