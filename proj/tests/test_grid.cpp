#include <doctest.h>

#include <cmath>
#include <limits>

#include "korovkin/grid.hpp"
#include "support.hpp"

using namespace korovkin;

namespace {

double brute_h_min(const Grid& g) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) best = std::min(best, g.node_distance(a, b));
  return best;
}

}  // namespace

TEST_CASE("box grids: weights sum to the measure and h_min is the closest pair") {
  for (auto layout : {NodeLayout::Midpoint, NodeLayout::Lattice}) {
    for (std::size_t r : {4, 7, 12}) {
      const Grid g1(Region::box({{0.0, 2.0}}), r, layout);
      const Grid g2(Region::box({{0.0, 1.0}, {-1.0, 0.5}}), r, layout);
      CHECK(g1.total_weight() == doctest::Approx(2.0).epsilon(1e-14));
      CHECK(g2.total_weight() == doctest::Approx(1.5).epsilon(1e-14));
      CHECK(g1.h_min() == doctest::Approx(brute_h_min(g1)).epsilon(1e-12));
      CHECK(g2.h_min() == doctest::Approx(brute_h_min(g2)).epsilon(1e-12));
      CHECK(g2.size() == r * r);
      for (double w : g2.weights()) CHECK(w > 0.0);
    }
  }
}

TEST_CASE("lattice box grids contain the corners") {
  const Grid g(Region::unit_box(2), 5, NodeLayout::Lattice);
  CHECK(g.node(0)[0] == 0.0);
  CHECK(g.node(0)[1] == 0.0);
  CHECK(g.node(g.size() - 1)[0] == 1.0);
  CHECK(g.node(g.size() - 1)[1] == 1.0);
  // last axis varies fastest
  CHECK(g.node(1)[0] == 0.0);
  CHECK(g.node(1)[1] == doctest::Approx(0.25));
}

TEST_CASE("simplex grids: positive weights, area one half, nodes inside") {
  for (auto layout : {NodeLayout::Midpoint, NodeLayout::Lattice}) {
    for (std::size_t r : {4, 9, 16}) {
      const Grid g(Region::simplex2(), r, layout);
      CHECK(g.total_weight() == doctest::Approx(0.5).epsilon(1e-14));
      CHECK(g.h_min() == doctest::Approx(brute_h_min(g)).epsilon(1e-12));
      for (std::size_t k = 0; k < g.size(); ++k) {
        CHECK(g.weight(k) > 0.0);
        CHECK(g.node(k)[0] >= 0.0);
        CHECK(g.node(k)[1] >= 0.0);
        CHECK(g.node(k)[0] + g.node(k)[1] <= 1.0 + 1e-15);
      }
      if (layout == NodeLayout::Midpoint) CHECK(g.size() == r * r);
      else CHECK(g.size() == (r + 1) * (r + 2) / 2);
    }
  }
}

TEST_CASE("simplex quadrature integrates linear functions exactly") {
  // Oracle: ∫ x over the simplex is 1/6.
  for (auto layout : {NodeLayout::Midpoint, NodeLayout::Lattice}) {
    const Grid g(Region::simplex2(), 10, layout);
    double s = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) s += g.weight(k) * g.node(k)[0];
    CHECK(s == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  }
}

TEST_CASE("grid construction errors") {
  CHECK(error_kind([] { Grid(Region::unit_box(1), 3, NodeLayout::Midpoint); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([] { Region::box({{1.0, 1.0}}); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([] { Region::box({}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("same_as compares geometry") {
  const auto a = build_grid(Region::unit_box(1), 10);
  const auto b = build_grid(Region::unit_box(1), 10);
  const auto c = build_grid(Region::unit_box(1), 11);
  CHECK(a->same_as(*b));
  CHECK_FALSE(a->same_as(*c));
}
