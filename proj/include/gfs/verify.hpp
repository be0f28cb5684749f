#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfs {

struct VerifyOptions {
  /// Upper bound applied to every check's disk/term range. Each check also
  /// has its own default ceiling (e.g. 60 for the oracle comparison).
  std::size_t max_n = 500;
  std::uint64_t seed = 20131121;
  /// Name of a check whose first comparison is forced to fail. Used by the
  /// harness self-test only.
  std::optional<std::string> inject_fault;
};

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  bool passed = true;
  double elapsed_ms = 0.0;
  /// Serialized first violating instance, empty when passed.
  std::string failure;
  /// Observations that are reported but not asserted.
  std::vector<std::string> notes;
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  bool passed() const;
  std::size_t total_instances() const;
};

/// Names of every check run_verify performs, in execution order.
std::vector<std::string> verify_check_names();

/// Runs the full sweep: oracle vs. smooth-sum vs. closed form, the
/// sequence identities, split identities, plan replays and BFS comparisons.
VerifySummary run_verify(const VerifyOptions& options);

}  // namespace gfs
