#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace korovkin {

enum class IndexKind { Single, Pair };

/// A real-valued family indexed by 1..horizon (Single) or by
/// (i, j) in [1, horizon]^2 (Pair). Values are stored densely and are
/// immutable after construction.
class Net {
 public:
  static constexpr std::size_t kMinHorizon = 8;

  /// Empty placeholder with horizon 0.
  Net() : kind_(IndexKind::Single), horizon_(0) {}

  static Net single(std::size_t horizon, const std::function<double(std::size_t)>& value);
  static Net pair(std::size_t horizon,
                  const std::function<double(std::size_t, std::size_t)>& value);
  /// values[k] is the value at w = k + 1.
  static Net from_values(std::vector<double> values);

  IndexKind kind() const noexcept { return kind_; }
  std::size_t horizon() const noexcept { return horizon_; }

  /// Single-index access, 1-based.
  double operator()(std::size_t w) const;
  /// Pair access, 1-based.
  double operator()(std::size_t i, std::size_t j) const;

  /// Single view: itself for Single nets, the diagonal w -> (w, w) for Pair nets.
  Net diagonal() const;
  /// Entry (i, j) as seen by pair modes: x_j for Single nets (each row
  /// repeats the sequence), x_{i,j} for Pair nets.
  double pair_value(std::size_t i, std::size_t j) const;

  std::span<const double> values() const noexcept { return values_; }

  Net map(const std::function<double(double)>& fn) const;
  /// Pointwise combination; both nets must share kind and horizon.
  Net zip(const Net& other, const std::function<double(double, double)>& fn) const;

 private:
  Net(IndexKind kind, std::size_t horizon, std::vector<double> values);

  IndexKind kind_;
  std::size_t horizon_;
  std::vector<double> values_;
};

Net operator+(const Net& a, const Net& b);
Net operator-(const Net& a, const Net& b);
Net operator*(double s, const Net& a);
Net abs(const Net& a);

}  // namespace korovkin
