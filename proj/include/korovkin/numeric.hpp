#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace korovkin {

/// Neumaier-compensated accumulator. Adding terms in a fixed order gives
/// bit-identical results across runs.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  KahanSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Thread cap from KOROVKIN_LAB_THREADS (default: hardware concurrency).
std::size_t max_threads();

/// Runs body(k) for k in [0, n). Each k is independent; results must be
/// written to slot k so the caller can reduce in ascending order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Stateless 64-bit mixer used for reproducible pseudo-random predicates.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool is_perfect_square(std::size_t n) noexcept;

}  // namespace korovkin

namespace korovkin {

/// First index of the "last quarter" window used as the finite surrogate
/// for lim over the index: ceil(3h/4) + 1.
constexpr std::size_t tail_begin(std::size_t horizon) noexcept {
  return (3 * horizon + 3) / 4 + 1;
}

}  // namespace korovkin
