#include "korovkin/rate.hpp"

#include <cmath>
#include <string>

#include "korovkin/error.hpp"

namespace korovkin {

const char* to_string(RateKind kind) noexcept {
  switch (kind) {
    case RateKind::LittleO: return "little-o";
    case RateKind::BigO: return "big-O";
    case RateKind::Neither: return "neither";
  }
  return "unknown";
}

RateClass rate_classify(const Net& num, const Net& den, const ConvergenceMode& mode,
                        const Tolerances& tol) {
  if (num.kind() != den.kind()) throw Error(ErrorKind::invalid_argument, "index kinds differ");
  if (num.horizon() != den.horizon())
    throw Error(ErrorKind::horizon_mismatch, "numerator and denominator horizons differ");
  for (double v : den.values()) {
    if (v == 0.0) throw Error(ErrorKind::zero_denominator, "denominator net vanishes");
  }

  const Net ratio = num.zip(den, [](double a, double b) { return std::abs(a) / std::abs(b); });
  RateClass out;
  out.limsup_estimate = filter_limsup_liminf(ratio, mode, tol).limsup;
  if (out.limsup_estimate <= tol.o_tol) {
    out.kind = RateKind::LittleO;
  } else if (std::isfinite(out.limsup_estimate) && out.limsup_estimate <= tol.big_c_cap) {
    out.kind = RateKind::BigO;
  } else {
    out.kind = RateKind::Neither;
  }

  const Net diag = ratio.diagonal();
  for (std::size_t w = 1; w <= diag.horizon(); w *= 2) out.evidence.emplace_back(w, diag(w));
  if (out.evidence.back().first != diag.horizon())
    out.evidence.emplace_back(diag.horizon(), diag(diag.horizon()));
  return out;
}

}  // namespace korovkin
