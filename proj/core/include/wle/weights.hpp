#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wle/graph.hpp"

namespace wle {

/// Graph-level inputs some weights need besides (D, d_i, d_j).
struct WeightContext {
  std::size_t n = 0;
  /// Actual diameter of the sampled graph; kUnreachable when disconnected.
  Distance diameter = 2;
};

enum class WeightKind { DegreeBased, DistanceBased, DegreeDistance };

std::string_view to_string(WeightKind kind) noexcept;

/// Limit of f(1,np,np) / f(2,np,np) as n grows. Declared per weight, never
/// estimated.
class LimitClass {
 public:
  static LimitClass finite(double c) { return LimitClass(c); }
  static LimitClass infinite() { return LimitClass(); }

  bool is_finite() const noexcept { return constant_.has_value(); }
  /// Only meaningful when is_finite().
  double constant() const { return constant_.value(); }

 private:
  LimitClass() = default;
  explicit LimitClass(double c) : constant_(c) {}
  std::optional<double> constant_;
};

struct AsymPair {
  double f1 = 0;  // f(1, np, np)
  double f2 = 0;  // f(2, np, np)
};

/// Raised when a distance-dependent weight meets an unreachable pair. The
/// caller may resample the graph (see SweepConfig::resample_disconnected).
class DisconnectedGraphError : public std::runtime_error {
 public:
  explicit DisconnectedGraphError(const std::string& weight);
};

/// Raised when a weight leaves the real domain (log of a nonpositive number,
/// division by zero, ...).
class WeightDomainError : public std::domain_error {
  using std::domain_error::domain_error;
};

/// f(D(i,j), d_i, d_j) together with its closed-form values at the typical
/// degree np. The closed forms are written out per entry so they can be
/// cross-checked against the generic evaluator.
class WeightFunction {
 public:
  using Evaluator =
      std::function<double(Distance, double, double, const WeightContext&)>;
  using Asymptotic = std::function<double(double n, double p)>;

  struct Definition {
    std::string name;
    WeightKind kind = WeightKind::DegreeBased;
    /// f vanishes for D >= 2 (degree-based indices and the plain indicator).
    bool adjacency_only = false;
    Evaluator evaluate;
    Asymptotic f1_asym;
    Asymptotic f2_asym;
    LimitClass limit = LimitClass::infinite();
    std::vector<double> params;
  };

  explicit WeightFunction(Definition def);

  const std::string& name() const noexcept { return def_.name; }
  WeightKind kind() const noexcept { return def_.kind; }
  bool adjacency_only() const noexcept { return def_.adjacency_only; }
  bool depends_on_degrees() const noexcept {
    return def_.kind != WeightKind::DistanceBased;
  }
  const LimitClass& limit_class() const noexcept { return def_.limit; }
  const std::vector<double>& params() const noexcept { return def_.params; }

  /// f(D, d_i, d_j). D must be >= 1. Returns 0 beyond adjacency for
  /// adjacency-only weights (including unreachable pairs); throws
  /// DisconnectedGraphError for unreachable pairs otherwise.
  double evaluate(Distance d, double di, double dj,
                  const WeightContext& ctx) const;

  /// Closed-form (f(1,np,np), f(2,np,np)) with diam fixed at 2.
  AsymPair asym(double n, double p) const;

  /// c * f, with the metadata scaled to match.
  WeightFunction scaled(double c) const;

 private:
  Definition def_;
};

/// Every supported index. `alpha` parameterizes general_randic.
std::vector<WeightFunction> registry(double alpha = 0.5);

/// Canonical CLI identifiers, registry order.
std::vector<std::string> weight_names();

/// Throws std::invalid_argument for unknown names.
WeightFunction find_weight(std::string_view name, double alpha = 0.5);

/// (f(1,np,np), f(2,np,np)). Requires 0 < p < 1 and n >= 2.
AsymPair asym_pair(const WeightFunction& w, double n, double p);

/// Free-function form of WeightFunction::evaluate.
double evaluate_entry(const WeightFunction& w, Distance d, double di, double dj,
                      const WeightContext& ctx);

}  // namespace wle
