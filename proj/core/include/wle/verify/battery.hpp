#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace wle::verify {

struct BatteryOptions {
  /// Reduced n and trial counts; thresholds are unchanged.
  bool fast = false;
  /// Worker threads for sweeps (0 means hardware concurrency).
  unsigned jobs = 1;
  std::uint64_t master_seed = 20240611;
  /// Diagnostics sink (spectral radii, timings); null silences them.
  std::ostream* log = nullptr;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string measured;
  std::string threshold;
};

inline constexpr int kCriterionCount = 11;

/// Runs a single criterion, 1..kCriterionCount. Throws std::out_of_range for
/// other ids.
CriterionResult run_criterion(int id, const BatteryOptions& opts);

/// Runs the given criteria in order (all when empty).
std::vector<CriterionResult> run_battery(const BatteryOptions& opts,
                                         const std::vector<int>& ids = {});

/// "criterion,name,status,measured,threshold" followed by one row per result.
/// Contains no timing or host information, so equal inputs give equal bytes.
std::string to_csv(const std::vector<CriterionResult>& results);

}  // namespace wle::verify
