#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "korovkin/convergence.hpp"
#include "korovkin/net.hpp"
#include "korovkin/tolerances.hpp"

namespace korovkin {

enum class RateKind { LittleO, BigO, Neither };

const char* to_string(RateKind kind) noexcept;

struct RateClass {
  RateKind kind = RateKind::Neither;
  /// Filter limsup of |num|/|den|; may be ±infinity.
  double limsup_estimate = 0.0;
  /// Ratio sampled on the ladder 1, 2, 4, ... and the horizon (diagonal for pair nets).
  std::vector<std::pair<std::size_t, double>> evidence;

  /// LittleO verdicts satisfy the big-O bound as well.
  bool satisfies_big_o() const noexcept { return kind != RateKind::Neither; }
};

RateClass rate_classify(const Net& num, const Net& den, const ConvergenceMode& mode,
                        const Tolerances& tol = {});

}  // namespace korovkin
