#pragma once

#include <optional>

#include "korovkin/error.hpp"

/// Kind of the korovkin::Error thrown by fn, or nullopt if it returns.
template <class Fn>
std::optional<korovkin::ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const korovkin::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
