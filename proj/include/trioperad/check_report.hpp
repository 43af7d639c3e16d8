#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace trioperad {

/// Outcome of an exhaustive identity check.
struct CheckReport {
  bool pass = true;
  /// Number of instances evaluated.
  std::size_t cases = 0;
  /// First failing instance, human readable.
  std::optional<std::string> witness;

  void fail(std::string what) {
    if (pass) witness = std::move(what);
    pass = false;
  }
};

}  // namespace trioperad
