#pragma once

// Command-line front end: every checker and calculator as a subcommand.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace trioperad {

struct Report {
  /// The arguments, joined by spaces.
  std::string command;
  bool pass = true;
  /// First counterexample of each failing check.
  std::vector<std::string> witnesses;
  nlohmann::json payload = nlohmann::json::object();
  /// When set, printed instead of the JSON document.
  std::optional<std::string> text;
  /// Set for malformed command lines and literals; printed to stderr.
  std::optional<std::string> usage_error;

  /// 0 iff pass; 1 for a failed check; 2 for a usage or domain error.
  int exit_code() const { return usage_error ? 2 : (pass ? 0 : 1); }
  /// {"command", "pass", "witnesses", "payload"}.
  nlohmann::json to_json() const;
  /// What the command prints on stdout.
  std::string render() const;
};

enum class CertifyLevel { Quick, Full };

/// Every module check in one report: complexes up to weight 4 (Quick) or 5
/// (Full). The payload holds no timings, so reruns are identical.
Report certify_all(CertifyLevel level);

/// args excludes the program name.
Report run(const std::vector<std::string>& args);

}  // namespace trioperad
