#pragma once

// Property suites over generated instances. Each suite draws `count`
// instances from independent streams derived from the seed, so a report is a
// pure function of its configuration.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lalpha {

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t count = 1000;
  /// Upper bound on generated term size.
  std::size_t size = 40;
  /// Step budget for normalization inside a trial.
  std::size_t fuel = 10000;
};

struct TrialFailure {
  std::size_t index;
  std::string term;
  std::string context;
  std::string detail;
  /// Reduction trace leading to the failure, when one exists.
  std::string trace;
};

struct TrialReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t inconclusive = 0;
  /// Individual property checks performed across all trials (steps, pairs, ...).
  std::size_t checks = 0;
  /// Number of failed trials; `failures` keeps the first few in index order.
  std::size_t failed = 0;
  std::vector<TrialFailure> failures;

  bool ok() const { return failed == 0; }
  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Throws std::invalid_argument for an unknown suite.
TrialReport run_suite(std::string_view name, const SuiteConfig& cfg);

}  // namespace lalpha
