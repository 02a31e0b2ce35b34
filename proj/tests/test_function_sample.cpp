#include <doctest.h>

#include <cmath>
#include <sstream>

#include "korovkin/function_sample.hpp"
#include "support.hpp"

using namespace korovkin;

TEST_CASE("from_field samples nodes and keeps the evaluator") {
  const auto g = build_grid(Region::unit_box(1), 10);
  const auto f = FunctionSample::from_field(g, [](std::span<const double> t) { return t[0] * t[0]; });
  CHECK(f.size() == 10);
  CHECK(f[0] == doctest::Approx(0.0025));
  CHECK(f.has_evaluator());
  const double p[1] = {0.3};
  CHECK(f.evaluate(p) == doctest::Approx(0.09));
  CHECK(f.sup_abs() == doctest::Approx(0.9025));
}

TEST_CASE("interpolation is exact for multilinear data on boxes") {
  const auto g = build_grid(Region::unit_box(2), 6, NodeLayout::Lattice);
  std::vector<double> v(g->size());
  for (std::size_t k = 0; k < g->size(); ++k) v[k] = 1.0 + 2.0 * g->node(k)[0] - g->node(k)[1] + g->node(k)[0] * g->node(k)[1];
  const auto f = FunctionSample::from_values(g, v);
  CHECK_FALSE(f.has_evaluator());
  for (double x : {0.0, 0.13, 0.5, 0.97, 1.0}) {
    for (double y : {0.0, 0.41, 1.0}) {
      const double p[2] = {x, y};
      CHECK(f.evaluate(p) == doctest::Approx(1.0 + 2.0 * x - y + x * y).epsilon(1e-12));
    }
  }
}

TEST_CASE("midpoint grids extrapolate linearly at the edges") {
  const auto g = build_grid(Region::unit_box(1), 8);
  const auto f = FunctionSample::from_values(g, [&] {
    std::vector<double> v;
    for (std::size_t k = 0; k < g->size(); ++k) v.push_back(3.0 * g->node(k)[0] - 1.0);
    return v;
  }());
  const double p0[1] = {0.0};
  const double p1[1] = {1.0};
  CHECK(f.evaluate(p0) == doctest::Approx(-1.0));
  CHECK(f.evaluate(p1) == doctest::Approx(2.0));
}

TEST_CASE("simplex samples without evaluator cannot be queried off-node") {
  const auto g = build_grid(Region::simplex2(), 6);
  const auto f = FunctionSample::from_values(g, std::vector<double>(g->size(), 1.0));
  const double p[2] = {0.1, 0.1};
  CHECK(error_kind([&] { f.evaluate(p); }) == ErrorKind::unsupported);
}

TEST_CASE("arithmetic composes evaluators and checks grids") {
  const auto g = build_grid(Region::unit_box(1), 10);
  const auto a = FunctionSample::from_field(g, [](std::span<const double> t) { return t[0]; });
  const auto b = FunctionSample::constant(g, 2.0);
  const auto c = 3.0 * (a - b) + b;
  const double p[1] = {0.5};
  CHECK(c.has_evaluator());
  CHECK(c.evaluate(p) == doctest::Approx(3.0 * (0.5 - 2.0) + 2.0));
  CHECK(a.abs()[0] == a[0]);
  CHECK(a.map([](double v) { return -v; }).evaluate(p) == doctest::Approx(-0.5));
  const auto other = build_grid(Region::unit_box(1), 11);
  CHECK(error_kind([&] { a + FunctionSample::zero(other); }) == ErrorKind::grid_mismatch);
}

TEST_CASE("non-finite values are rejected") {
  const auto g = build_grid(Region::unit_box(1), 4);
  CHECK(error_kind([&] { FunctionSample::from_values(g, {0.0, NAN, 0.0, 0.0}); }) == ErrorKind::non_finite);
  CHECK(error_kind([&] { FunctionSample::from_values(g, {0.0, 0.0}); }) == ErrorKind::grid_mismatch);
}

TEST_CASE("CSV import matches rows to nodes") {
  const auto g = build_grid(Region::unit_box(1), 4, NodeLayout::Lattice);
  std::istringstream in("x,value\n1,4\n0,1\n0.33333333333333331,2\r\n0.66666666666666663,3\n");
  const auto f = read_function_csv(in, g);
  CHECK(f[0] == 1.0);
  CHECK(f[1] == 2.0);
  CHECK(f[2] == 3.0);
  CHECK(f[3] == 4.0);

  std::istringstream missing("0,1\n1,4\n");
  CHECK(error_kind([&] { read_function_csv(missing, g); }) == ErrorKind::io);
  std::istringstream twice("0,1\n0,1\n0.33333333333333331,2\n0.66666666666666663,3\n1,4\n");
  CHECK(error_kind([&] { read_function_csv(twice, g); }) == ErrorKind::io);
  std::istringstream off("0.5,1\n");
  CHECK(error_kind([&] { read_function_csv(off, g); }) == ErrorKind::grid_mismatch);
}
