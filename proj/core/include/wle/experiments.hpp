#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wle/predictors.hpp"
#include "wle/weights.hpp"

namespace wle {

/// Resampling cap for disconnected draws under resample_disconnected.
inline constexpr std::size_t kMaxResamples = 100;
/// Relative half-width of the bulk window around predict_bulk_eigenvalue.
inline constexpr double kBulkTolerance = 0.05;
/// A trial "passes" the bulk check when this fraction of eigenvalues is in
/// the window.
inline constexpr double kBulkPassFraction = 0.95;

struct SweepConfig {
  std::vector<std::string> weight_names;
  std::vector<std::size_t> n_values;
  double p = 0.5;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  bool resample_disconnected = false;
  std::vector<Quantity> quantities{std::begin(kAllQuantities),
                                   std::end(kAllQuantities)};
  /// Relative tolerance for point predictions.
  double tolerance = 0.10;
  /// Relative slack on bracket endpoints.
  double bracket_slack = 0.05;
  /// general_randic exponent.
  double alpha = 0.5;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

struct TrialRecord {
  std::string weight;
  std::size_t n = 0;
  double p = 0;
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  /// nullopt for a disconnected (failed) sample.
  std::optional<Distance> diameter;
  std::size_t connected_retries = 0;
  std::map<Quantity, double> empirical;
  std::map<Quantity, Prediction> predicted;
  std::map<Quantity, double> ratio;
  std::optional<double> bulk_fraction;
  /// Non-empty when the trial produced no energies.
  std::string failure;

  bool failed() const noexcept { return !failure.empty(); }
};

struct VerdictEntry {
  std::string weight;
  std::size_t n = 0;
  Quantity quantity = Quantity::LELf;
  std::size_t trials = 0;  // successful trials contributing
  double mean_empirical = 0;
  std::optional<double> mean_ratio;
  std::optional<double> sd_ratio;
  std::optional<Bracket> bracket;
  /// nullopt when the prediction is indeterminate.
  std::optional<bool> pass;
};

struct BulkEntry {
  std::string weight;
  std::size_t n = 0;
  double mean_fraction = 0;
  double pass_rate = 0;
};

struct BatchVerdict {
  std::vector<VerdictEntry> entries;
  std::vector<BulkEntry> bulk;
  std::size_t failed_trials = 0;

  const VerdictEntry* find(std::string_view weight, std::size_t n,
                           Quantity q) const;
  const BulkEntry* find_bulk(std::string_view weight, std::size_t n) const;
};

struct SweepResult {
  std::vector<TrialRecord> records;  // sorted by (cell, trial)
  BatchVerdict verdict;
};

/// Cell c = weight_index * |n_values| + n_index; trial t of cell c draws its
/// graph from stable_mix(master_seed, c, t). Output does not depend on `jobs`
/// (0 means hardware concurrency).
SweepResult run_sweep(const SweepConfig& cfg, unsigned jobs = 1);

/// Aggregates records into per-(weight, n, quantity) verdicts.
BatchVerdict summarize(const std::vector<TrialRecord>& records,
                       const SweepConfig& cfg);

struct ConjectureResult {
  double pass_rate = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;
  double min_margin = 0;
};

/// Fraction of trials with LE_f - E(W_f) > 0. Failed trials count as
/// failures. E_Wf and LE_f are added to the quantities if missing.
ConjectureResult verify_conjecture(const SweepConfig& cfg, unsigned jobs = 1);

struct AuditResult {
  double degree_rate = 0;    // all degrees within (np - n^{3/4}, np + n^{3/4})
  double diameter_rate = 0;  // diameter exactly 2
  std::size_t trials = 0;
};

AuditResult degree_diameter_audit(std::size_t n, double p, std::size_t trials,
                                  std::uint64_t master_seed);

/// Column order: weight,quantity,n,p,trial,seed,empirical,predicted,
/// pred_lower,pred_upper,ratio,diameter,retries,bulk_fraction. Preceded by a
/// single '#' metadata line.
std::string write_csv(const std::vector<TrialRecord>& records,
                      const SweepConfig& cfg);

nlohmann::json to_json(const TrialRecord& r);
nlohmann::json to_json(const BatchVerdict& v);

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Flat "key = value" text; '#' starts a comment. Lists are comma-separated
/// and may be wrapped in [ ]; string items may be quoted. Keys mirror
/// SweepConfig: weights, n_values, p, trials, master_seed,
/// resample_disconnected, quantities, tolerance, bracket_slack, alpha.
SweepConfig parse_sweep_config(const std::string& text);

}  // namespace wle
