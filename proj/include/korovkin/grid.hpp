#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace korovkin {

struct Interval {
  double lo;
  double hi;
};

enum class RegionKind { Box, Simplex2 };

/// Integration domain: an axis-aligned box or the unit simplex
/// {x, y >= 0, x + y <= 1}.
struct Region {
  RegionKind kind = RegionKind::Box;
  std::vector<Interval> axes;

  static Region box(std::vector<Interval> axes);
  static Region unit_box(std::size_t dimension);
  static Region simplex2();

  std::size_t dimension() const noexcept { return kind == RegionKind::Box ? axes.size() : 2; }
  double measure() const noexcept;
  std::string describe() const;
};

/// Midpoint: cell midpoints (box) or triangle centroids (simplex), equal weights.
/// Lattice: cell corners including the boundary, trapezoid / vertex-lumped
/// weights. Both rules have strictly positive weights.
enum class NodeLayout { Midpoint, Lattice };

class Grid {
 public:
  Grid(Region region, std::size_t resolution, NodeLayout layout);

  const Region& region() const noexcept { return region_; }
  std::size_t resolution() const noexcept { return resolution_; }
  NodeLayout layout() const noexcept { return layout_; }
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return weights_.size(); }

  std::span<const double> node(std::size_t k) const noexcept {
    return {coords_.data() + k * dim_, dim_};
  }
  double weight(std::size_t k) const noexcept { return weights_[k]; }
  std::span<const double> weights() const noexcept { return weights_; }
  /// Σ weights, compensated.
  double total_weight() const;
  double h_min() const noexcept { return h_min_; }

  double distance(std::span<const double> a, std::span<const double> b) const noexcept;
  double node_distance(std::size_t a, std::size_t b) const noexcept {
    return distance(node(a), node(b));
  }

  /// Per-axis node coordinates of a box grid (tensor structure).
  const std::vector<double>& axis_nodes(std::size_t axis) const { return axis_nodes_.at(axis); }
  bool is_tensor() const noexcept { return region_.kind == RegionKind::Box; }

  bool same_as(const Grid& other) const noexcept;

 private:
  void build_box();
  void build_simplex();

  Region region_;
  std::size_t resolution_;
  NodeLayout layout_;
  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<double> weights_;
  std::vector<std::vector<double>> axis_nodes_;
  double h_min_ = 0.0;
};

using GridPtr = std::shared_ptr<const Grid>;

inline constexpr std::size_t kMinResolution = 4;

GridPtr build_grid(const Region& region, std::size_t resolution,
                   NodeLayout layout = NodeLayout::Midpoint);

}  // namespace korovkin
