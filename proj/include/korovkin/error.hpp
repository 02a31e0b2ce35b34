#pragma once

#include <stdexcept>
#include <string>

namespace korovkin {

enum class ErrorKind {
  invalid_argument,
  horizon_too_small,
  horizon_mismatch,
  non_finite,
  zero_denominator,
  axioms_failed,
  grid_mismatch,
  wrong_region,
  out_of_range,
  unsupported,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every precondition violation in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::horizon_too_small: return "horizon-too-small";
    case ErrorKind::horizon_mismatch: return "horizon-mismatch";
    case ErrorKind::non_finite: return "non-finite";
    case ErrorKind::zero_denominator: return "zero-denominator";
    case ErrorKind::axioms_failed: return "axioms-failed";
    case ErrorKind::grid_mismatch: return "grid-mismatch";
    case ErrorKind::wrong_region: return "wrong-region";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace korovkin
