#include "korovkin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "korovkin/error.hpp"
#include "korovkin/numeric.hpp"

namespace korovkin {

Region Region::box(std::vector<Interval> axes) {
  if (axes.empty()) throw Error(ErrorKind::invalid_argument, "box needs at least one axis");
  for (const auto& a : axes) {
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || !(a.hi > a.lo))
      throw Error(ErrorKind::invalid_argument, "degenerate interval");
  }
  return Region{RegionKind::Box, std::move(axes)};
}

Region Region::unit_box(std::size_t dimension) {
  return box(std::vector<Interval>(dimension, Interval{0.0, 1.0}));
}

Region Region::simplex2() { return Region{RegionKind::Simplex2, {}}; }

double Region::measure() const noexcept {
  if (kind == RegionKind::Simplex2) return 0.5;
  double v = 1.0;
  for (const auto& a : axes) v *= a.hi - a.lo;
  return v;
}

std::string Region::describe() const {
  if (kind == RegionKind::Simplex2) return "simplex2";
  std::string s = "box";
  for (const auto& a : axes) s += "[" + std::to_string(a.lo) + "," + std::to_string(a.hi) + "]";
  return s;
}

Grid::Grid(Region region, std::size_t resolution, NodeLayout layout)
    : region_(std::move(region)), resolution_(resolution), layout_(layout), dim_(region_.dimension()) {
  if (resolution_ < kMinResolution)
    throw Error(ErrorKind::invalid_argument,
                "resolution " + std::to_string(resolution_) + " is below " +
                    std::to_string(kMinResolution));
  if (region_.kind == RegionKind::Box) {
    for (const auto& a : region_.axes) {
      if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || !(a.hi > a.lo))
        throw Error(ErrorKind::invalid_argument, "degenerate interval");
    }
    build_box();
  } else {
    build_simplex();
  }
}

void Grid::build_box() {
  const std::size_t r = resolution_;
  std::vector<std::vector<double>> axis_weights(dim_);
  axis_nodes_.assign(dim_, {});
  h_min_ = std::numeric_limits<double>::infinity();
  for (std::size_t d = 0; d < dim_; ++d) {
    const auto [lo, hi] = region_.axes[d];
    auto& nodes = axis_nodes_[d];
    auto& wts = axis_weights[d];
    nodes.resize(r);
    wts.resize(r);
    if (layout_ == NodeLayout::Midpoint) {
      const double h = (hi - lo) / static_cast<double>(r);
      for (std::size_t k = 0; k < r; ++k) {
        nodes[k] = lo + (static_cast<double>(k) + 0.5) * h;
        wts[k] = h;
      }
      h_min_ = std::min(h_min_, h);
    } else {
      const double h = (hi - lo) / static_cast<double>(r - 1);
      for (std::size_t k = 0; k < r; ++k) {
        nodes[k] = k + 1 == r ? hi : lo + static_cast<double>(k) * h;
        wts[k] = (k == 0 || k + 1 == r) ? 0.5 * h : h;
      }
      h_min_ = std::min(h_min_, h);
    }
  }

  std::size_t total = 1;
  for (std::size_t d = 0; d < dim_; ++d) total *= r;
  coords_.resize(total * dim_);
  weights_.resize(total);
  std::vector<std::size_t> idx(dim_, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    double w = 1.0;
    for (std::size_t d = 0; d < dim_; ++d) {
      coords_[flat * dim_ + d] = axis_nodes_[d][idx[d]];
      w *= axis_weights[d][idx[d]];
    }
    weights_[flat] = w;
    for (std::size_t d = dim_; d-- > 0;) {
      if (++idx[d] < r) break;
      idx[d] = 0;
    }
  }
}

void Grid::build_simplex() {
  const std::size_t r = resolution_;
  const double h = 1.0 / static_cast<double>(r);
  if (layout_ == NodeLayout::Midpoint) {
    const double area = 0.5 * h * h;
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; a + b < r; ++b) {
        coords_.push_back((static_cast<double>(a) + 1.0 / 3.0) * h);
        coords_.push_back((static_cast<double>(b) + 1.0 / 3.0) * h);
        weights_.push_back(area);
        if (a + b + 2 <= r) {
          coords_.push_back((static_cast<double>(a) + 2.0 / 3.0) * h);
          coords_.push_back((static_cast<double>(b) + 2.0 / 3.0) * h);
          weights_.push_back(area);
        }
      }
    }
    h_min_ = std::sqrt(2.0) / 3.0 * h;
  } else {
    // Vertex (a, b) gets one third of each adjacent triangle's area.
    const double share = h * h / 6.0;
    auto index = [r](std::size_t a, std::size_t b) {
      // rows a = 0..r, each holding b = 0..r-a
      return a * (r + 1) - a * (a - 1) / 2 + b;
    };
    const std::size_t n = (r + 1) * (r + 2) / 2;
    coords_.resize(2 * n);
    std::vector<KahanSum> acc(n);
    for (std::size_t a = 0; a <= r; ++a) {
      for (std::size_t b = 0; a + b <= r; ++b) {
        const std::size_t k = index(a, b);
        coords_[2 * k] = static_cast<double>(a) * h;
        coords_[2 * k + 1] = static_cast<double>(b) * h;
      }
    }
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; a + b < r; ++b) {
        for (std::size_t k : {index(a, b), index(a + 1, b), index(a, b + 1)}) acc[k] += share;
        if (a + b + 2 <= r)
          for (std::size_t k : {index(a + 1, b), index(a, b + 1), index(a + 1, b + 1)}) acc[k] += share;
      }
    }
    weights_.resize(n);
    for (std::size_t k = 0; k < n; ++k) weights_[k] = acc[k].value();
    h_min_ = h;
  }
}

double Grid::total_weight() const {
  KahanSum s;
  for (double w : weights_) s += w;
  return s.value();
}

double Grid::distance(std::span<const double> a, std::span<const double> b) const noexcept {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double t = a[d] - b[d];
    s += t * t;
  }
  return std::sqrt(s);
}

bool Grid::same_as(const Grid& other) const noexcept {
  if (this == &other) return true;
  if (region_.kind != other.region_.kind || resolution_ != other.resolution_ ||
      layout_ != other.layout_ || dim_ != other.dim_)
    return false;
  for (std::size_t d = 0; d < region_.axes.size(); ++d) {
    if (region_.axes[d].lo != other.region_.axes[d].lo || region_.axes[d].hi != other.region_.axes[d].hi)
      return false;
  }
  return true;
}

GridPtr build_grid(const Region& region, std::size_t resolution, NodeLayout layout) {
  return std::make_shared<const Grid>(region, resolution, layout);
}

}  // namespace korovkin
