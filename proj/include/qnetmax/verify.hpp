#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qnetmax {

/// Randomized property suites behind `qnetmax verify`. Instance i draws its
/// inputs from an RNG seeded with (seed, i), so any single instance can be
/// replayed in isolation.
struct SuiteSummary {
  std::string suite;
  std::uint64_t seed = 0;
  int instances = 0;
  int restarts = 0;
  int passed = 0;
  int failed = 0;
  /// Suite-specific worst-case statistic (max gap, max difference, ...).
  std::string metric;
  double worst = 0.0;
  /// Secondary statistic, e.g. the most negative gap for oracle suites.
  double worst_low = 0.0;
  std::vector<int> failing_instances;
};

const std::vector<std::string>& suite_names();

/// Throws Error{UnknownSuite} for names outside suite_names().
SuiteSummary run_suite(std::string_view name, std::uint64_t seed, int instances, int restarts);

}  // namespace qnetmax
