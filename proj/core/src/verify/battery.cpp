#include "wle/verify/battery.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "wle/energies.hpp"
#include "wle/experiments.hpp"
#include "wle/graph.hpp"
#include "wle/matrices.hpp"
#include "wle/rng.hpp"
#include "wle/spectral.hpp"
#include "wle/verify/charpoly.hpp"
#include "wle/weights.hpp"

namespace wle::verify {

namespace {

// Full-size runs; fast mode shrinks n and trials but keeps every threshold.
constexpr std::size_t kFullN = 400;
constexpr std::size_t kFastN = 160;
constexpr double kP = 0.5;

// Criterion thresholds.
constexpr double kEnergyTol = 0.10;
constexpr double kLelIeTol = 0.05;
constexpr double kLeLower = 0.4714;
constexpr double kLeUpper = 0.7071;
constexpr double kLePlusLower = 0.2834;
constexpr double kLePlusUpper = 1.4142;
constexpr double kEndpointSlack = 0.05;
constexpr double kWeightedRatioLow = 0.90;
constexpr double kWeightedRatioHigh = 1.10;
constexpr double kEnergyRatioLow = 0.85;
constexpr double kEnergyRatioHigh = 1.15;
constexpr double kBulkMin = 0.95;
constexpr double kAuditMin = 0.95;
constexpr std::size_t kOracleDraws = 1000;
constexpr double kOracleTol = 1e-8;
constexpr std::size_t kWeylPairs = 500;
constexpr double kWeylSlack = 1e-8;
constexpr double kCompleteTol = 1e-9;
constexpr double kScaling = 4.0;
constexpr double kScalingTol = 1e-9;
constexpr double kTraceTol = 1e-10;

struct Scale {
  std::size_t n;
  std::size_t trials_small;  // 5-trial criteria
  std::size_t trials_large;  // 10-trial criteria
  std::size_t audit_trials;
};

Scale scale_for(const BatteryOptions& o) {
  if (o.fast) return {kFastN, 3, 4, 10};
  return {kFullN, 5, 10, 20};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string range(double lo, double hi) {
  return "[" + num(lo) + ", " + num(hi) + "]";
}

double n15(std::size_t n) { return std::pow(static_cast<double>(n), 1.5); }

std::uint64_t seed_for(const BatteryOptions& o, int id) {
  return stable_mix(o.master_seed, 0x5eedULL, static_cast<std::uint64_t>(id));
}

SweepResult sweep(const BatteryOptions& o, int id,
                  std::vector<std::string> weights, std::size_t n, double p,
                  std::size_t trials, std::vector<Quantity> quantities) {
  SweepConfig cfg;
  cfg.weight_names = std::move(weights);
  cfg.n_values = {n};
  cfg.p = p;
  cfg.trials = trials;
  cfg.master_seed = seed_for(o, id);
  cfg.resample_disconnected = true;
  cfg.quantities = std::move(quantities);
  return run_sweep(cfg, o.jobs);
}

double mean_of(const SweepResult& r, const std::string& w, std::size_t n,
               Quantity q) {
  const VerdictEntry* e = r.verdict.find(w, n, q);
  if (e == nullptr || e->trials == 0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return e->mean_empirical;
}

double mean_ratio_of(const SweepResult& r, const std::string& w,
                     std::size_t n, Quantity q) {
  const VerdictEntry* e = r.verdict.find(w, n, q);
  if (e == nullptr || !e->mean_ratio) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return *e->mean_ratio;
}

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

void log_line(const BatteryOptions& o, const std::string& s) {
  if (o.log != nullptr) *o.log << s << '\n';
}

// Largest |eigenvalue| of W_f on one fresh sample, for the log.
void log_spectral_radius(const BatteryOptions& o, const std::string& weight,
                         std::size_t n, std::uint64_t seed) {
  if (o.log == nullptr) return;
  Graph g = generate_gnp(n, kP, seed);
  DistanceTable d = bfs_all_pairs(g);
  const GraphStats s = graph_stats(g, d);
  if (!s.connected) return;
  const WeightFunction w = find_weight(weight);
  const SymMatrix wm = build_weighted_distance(g, d, w, context_for(g, d));
  *o.log << "  " << weight << ": spectral radius of W_f = "
         << num(spectral_radius(sym_eigenvalues(wm))) << " (n=" << n << ")\n";
}

CriterionResult unweighted_energy(const BatteryOptions& o) {
  const Scale sc = scale_for(o);
  const auto r = sweep(o, 1, {"unweighted"}, sc.n, kP, sc.trials_large,
                       {Quantity::EWf});
  const double target = 8.0 / (3.0 * std::numbers::pi) * kP;
  const double v = mean_of(r, "unweighted", sc.n, Quantity::EWf) / n15(sc.n);
  log_spectral_radius(o, "unweighted", sc.n, seed_for(o, 1));
  return {1, "unweighted energy", within(v, target * (1 - kEnergyTol),
                                         target * (1 + kEnergyTol)),
          "E/n^1.5=" + num(v),
          range(target * (1 - kEnergyTol), target * (1 + kEnergyTol))};
}

CriterionResult lel_and_ie(const BatteryOptions& o) {
  const Scale sc = scale_for(o);
  const auto r = sweep(o, 2, {"unweighted"}, sc.n, kP, sc.trials_large,
                       {Quantity::LELf, Quantity::IEf});
  const double target = std::sqrt(kP);
  const double lo = target * (1 - kLelIeTol), hi = target * (1 + kLelIeTol);
  const double a = mean_of(r, "unweighted", sc.n, Quantity::LELf) / n15(sc.n);
  const double b = mean_of(r, "unweighted", sc.n, Quantity::IEf) / n15(sc.n);
  return {2, "LEL and IE", within(a, lo, hi) && within(b, lo, hi),
          "LEL/n^1.5=" + num(a) + " IE/n^1.5=" + num(b), range(lo, hi)};
}

CriterionResult laplacian_brackets(const BatteryOptions& o) {
  const Scale sc = scale_for(o);
  const auto r = sweep(o, 3, {"unweighted"}, sc.n, kP, sc.trials_large,
                       {Quantity::LEf, Quantity::LEPlusf});
  const double le = mean_of(r, "unweighted", sc.n, Quantity::LEf) / n15(sc.n);
  const double lp =
      mean_of(r, "unweighted", sc.n, Quantity::LEPlusf) / n15(sc.n);
  const double le_lo = kLeLower * (1 - kEndpointSlack);
  const double le_hi = kLeUpper * (1 + kEndpointSlack);
  const double lp_lo = kLePlusLower * (1 - kEndpointSlack);
  const double lp_hi = kLePlusUpper * (1 + kEndpointSlack);
  return {3, "Laplacian energy brackets",
          within(le, le_lo, le_hi) && within(lp, lp_lo, lp_hi),
          "LE/n^1.5=" + num(le) + " LE+/n^1.5=" + num(lp),
          "LE " + range(le_lo, le_hi) + " LE+ " + range(lp_lo, lp_hi)};
}

CriterionResult weighted_lel_ie(const BatteryOptions& o) {
  const Scale sc = scale_for(o);
  const std::vector<std::string> names{
      "first_zagreb",    "randic", "harary", "hyper_wiener", "reverse_wiener",
      "degree_distance", "gutman", "add_harary"};
  const auto r = sweep(o, 4, names, sc.n, kP, sc.trials_small,
                       {Quantity::LELf, Quantity::IEf});
  bool ok = true;
  double worst = 1.0;
  std::string worst_at;
  for (const auto& w : names) {
    for (Quantity q : {Quantity::LELf, Quantity::IEf}) {
      const double v = mean_ratio_of(r, w, sc.n, q);
      const bool pass = within(v, kWeightedRatioLow, kWeightedRatioHigh);
      ok = ok && pass;
      log_line(o, "  " + w + " " + std::string(to_string(q)) +
                      " ratio=" + num(v));
      if (!(std::abs(v - 1.0) <= std::abs(worst - 1.0))) {
        worst = v;
        worst_at = w + "/" + std::string(to_string(q));
      }
    }
  }
  return {4, "weighted LEL and IE", ok,
          "worst ratio " + num(worst) + " (" + worst_at + ")",
          range(kWeightedRatioLow, kWeightedRatioHigh)};
}

CriterionResult distance_le_bracket(const BatteryOptions& o) {
  const Scale sc = scale_for(o);
  const std::vector<std::string> names{"harary", "hyper_wiener"};
  const auto r = sweep(o, 5, names, sc.n, kP, sc.trials_small, {Quantity::LEf});
  bool ok = true;
  std::string measured, threshold;
  for (const auto& w : names) {
    const VerdictEntry* e = r.verdict.find(w, sc.n, Quantity::LEf);
    double v = std::numeric_limits<double>::quiet_NaN();
    double lo = v, hi = v;
    if (e != nullptr && e->bracket && e->trials > 0) {
      v = e->mean_empirical / n15(sc.n);
      lo = e->bracket->lower / n15(sc.n) * (1 - kEndpointSlack);
      hi = e->bracket->upper / n15(sc.n) * (1 + kEndpointSlack);
    }
    ok = ok && within(v, lo, hi);
    measured += (measured.empty() ? "" : " ") + w + "=" + num(v);
    threshold += (threshold.empty() ? "" : " ") + w + " " + range(lo, hi);
  }
  return {5, "distance-weighted LE bracket", ok, measured, threshold};
}

CriterionResult weighted_energy(const BatteryOptions& o) {
  const Scale sc = scale_for(o);
  const std::vector<std::string> names{"harary", "gutman"};
  const auto r =
      sweep(o, 6, names, sc.n, kP, sc.trials_small, {Quantity::EWf});
  bool ok = true;
  std::string measured;
  for (const auto& w : names) {
    const double v = mean_ratio_of(r, w, sc.n, Quantity::EWf);
    ok = ok && within(v, kEnergyRatioLow, kEnergyRatioHigh);
    measured += (measured.empty() ? "" : " ") + w + "=" + num(v);
    log_spectral_radius(o, w, sc.n, seed_for(o, 6));
  }
  return {6, "weighted energy", ok, "ratio " + measured,
          range(kEnergyRatioLow, kEnergyRatioHigh)};
}

CriterionResult dominance(const BatteryOptions& o) {
  const Scale sc = scale_for(o);
  const std::vector<std::string> names{"unweighted", "harary", "hyper_wiener",
                                       "gutman"};
  const double ps[] = {0.3, 0.5, 0.7};
  bool ok = true;
  double worst_rate = 1.0, min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t pi = 0; pi < 3; ++pi) {
    SweepConfig cfg;
    cfg.weight_names = names;
    cfg.n_values = {sc.n};
    cfg.p = ps[pi];
    cfg.trials = sc.trials_large;
    cfg.master_seed = stable_mix(seed_for(o, 7), pi, 0);
    cfg.resample_disconnected = true;
    cfg.quantities = {Quantity::EWf, Quantity::LEf};
    const ConjectureResult c = verify_conjecture(cfg, o.jobs);
    ok = ok && c.pass_rate == 1.0;
    worst_rate = std::min(worst_rate, c.pass_rate);
    min_margin = std::min(min_margin, c.min_margin);
    log_line(o, "  p=" + num(ps[pi]) + " pass_rate=" + num(c.pass_rate) +
                    " min_margin=" + num(c.min_margin));
  }
  return {7, "dominance of LE over E", ok,
          "pass_rate=" + num(worst_rate) + " min_margin=" + num(min_margin),
          "pass_rate = 1, margin > 0"};
}

CriterionResult eigenvalue_bulk(const BatteryOptions& o) {
  const Scale sc = scale_for(o);
  const std::vector<std::string> names{"unweighted", "harary"};
  const auto r = sweep(o, 8, names, sc.n, kP, sc.trials_small, {Quantity::LEf});
  bool ok = true;
  std::string measured;
  for (const auto& w : names) {
    const BulkEntry* b = r.verdict.find_bulk(w, sc.n);
    const double v =
        b != nullptr ? b->mean_fraction : std::numeric_limits<double>::quiet_NaN();
    ok = ok && v >= kBulkMin;
    measured += (measured.empty() ? "" : " ") + w + "=" + num(v);
  }
  return {8, "eigenvalue bulk", ok, "bulk_fraction " + measured,
          ">= " + num(kBulkMin) + " at tol " + num(kBulkTolerance)};
}

CriterionResult structure_audit(const BatteryOptions& o) {
  const Scale sc = scale_for(o);
  const AuditResult a =
      degree_diameter_audit(sc.n, kP, sc.audit_trials, seed_for(o, 9));
  return {9, "degree and diameter audit",
          a.degree_rate >= kAuditMin && a.diameter_rate >= kAuditMin,
          "degree_rate=" + num(a.degree_rate) +
              " diameter_rate=" + num(a.diameter_rate),
          ">= " + num(kAuditMin)};
}

Eigen::MatrixXd random_symmetric(PortableRng& rng, std::size_t n) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = 2.0 * rng.uniform() - 1.0;
      m(i, j) = m(j, i) = v;
    }
  }
  return m;
}

CriterionResult oracle_suites(const BatteryOptions& o) {
  PortableRng rng(seed_for(o, 10));

  double oracle_err = 0;
  for (std::size_t t = 0; t < kOracleDraws; ++t) {
    const std::size_t n = 1 + rng.next() % 4;
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const double v = static_cast<double>(rng.next() % 11) - 5.0;
        m(i, j) = m(j, i) = v;
      }
    }
    const auto solver = sym_eigenvalues(m);
    const auto oracle = charpoly_eigenvalues(m);
    for (std::size_t i = 0; i < n; ++i) {
      oracle_err = std::max(oracle_err, std::abs(solver[i] - oracle[i]));
    }
  }

  // Full Weyl form: nu_j + theta_k <= xi_i for j + k = n + i, and
  // xi_i <= nu_r + theta_s for r + s = i + 1 (1-based, descending).
  std::size_t violations = 0;
  for (std::size_t t = 0; t < kWeylPairs; ++t) {
    const std::size_t n = 1 + rng.next() % 20;
    const Eigen::MatrixXd h = random_symmetric(rng, n);
    const Eigen::MatrixXd p = random_symmetric(rng, n);
    const auto nu = sym_eigenvalues(h);
    const auto theta = sym_eigenvalues(p);
    const auto xi = sym_eigenvalues(Eigen::MatrixXd(h + p));
    for (std::size_t i = 1; i <= n; ++i) {
      double lower = -std::numeric_limits<double>::infinity();
      for (std::size_t j = i; j <= n; ++j) {
        lower = std::max(lower, nu[j - 1] + theta[n + i - j - 1]);
      }
      double upper = std::numeric_limits<double>::infinity();
      for (std::size_t r = 1; r <= i; ++r) {
        upper = std::min(upper, nu[r - 1] + theta[i - r]);
      }
      if (xi[i - 1] < lower - kWeylSlack || xi[i - 1] > upper + kWeylSlack) {
        ++violations;
      }
    }
  }

  double complete_err = 0;
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 30, 64}) {
    const Graph kn = generate_gnp(n, 1.0, 0);
    const UnweightedFamily fam = build_unweighted(kn);
    const auto lap = sym_eigenvalues(fam.laplacian.entries());
    const auto sig = sym_eigenvalues(fam.signless.entries());
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double want_l = i + 1 < n ? dn : 0.0;
      const double want_s = i == 0 ? 2 * dn - 2 : dn - 2;
      complete_err =
          std::max({complete_err, std::abs(lap[i] - want_l) / dn,
                    std::abs(sig[i] - want_s) / dn});
    }
  }

  return {10, "eigensolver oracles",
          oracle_err <= kOracleTol && violations == 0 &&
              complete_err <= kCompleteTol,
          "charpoly_err=" + num(oracle_err) +
              " weyl_violations=" + std::to_string(violations) +
              " complete_err=" + num(complete_err),
          "charpoly <= " + num(kOracleTol) + ", 0 violations, K_n <= " +
              num(kCompleteTol) + "*n"};
}

double rel(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

CriterionResult metamorphic(const BatteryOptions& o) {
  double scale_err = 0, trace_err = 0;
  const std::vector<std::string> names{"unweighted", "harary", "hyper_wiener",
                                       "gutman", "first_zagreb"};
  for (std::size_t t = 0; t < 3; ++t) {
    Graph g = generate_gnp(60, 0.5, stable_mix(seed_for(o, 11), 0, t));
    DistanceTable d = bfs_all_pairs(g);
    for (std::uint64_t retry = 1; !graph_stats(g, d).connected; ++retry) {
      g = generate_gnp(60, 0.5, stable_mix(seed_for(o, 11), retry, t));
      d = bfs_all_pairs(g);
    }
    const WeightContext ctx = context_for(g, d);
    for (const auto& name : names) {
      const WeightFunction w = find_weight(name);
      const EnergyReport base = full_report(g, d, w, ctx);
      const EnergyReport big = full_report(g, d, w.scaled(kScaling), ctx);
      scale_err = std::max(
          {scale_err, rel(big.laplacian_energy, kScaling * base.laplacian_energy),
           rel(big.lel, std::sqrt(kScaling) * base.lel)});
      const LaplacianFamily fam =
          build_laplacian_family(build_weighted_distance(g, d, w, ctx));
      const auto ev = sym_eigenvalues(fam.laplacian.entries());
      double sum = 0;
      for (double v : ev) sum += v;
      trace_err = std::max(
          trace_err, rel(sum, static_cast<double>(g.order()) * fam.mean.value));
    }
  }

  // Two fast batteries over criteria 1-10, the second with more threads;
  // the CSV bytes must match.
  BatteryOptions inner = o;
  inner.fast = true;
  inner.log = nullptr;
  std::vector<int> ids;
  for (int i = 1; i < kCriterionCount; ++i) ids.push_back(i);
  inner.jobs = 1;
  const std::string first = to_csv(run_battery(inner, ids));
  inner.jobs = std::max(
      2u, o.jobs == 0 ? std::thread::hardware_concurrency() : o.jobs);
  const std::string second = to_csv(run_battery(inner, ids));
  const bool identical = first == second;

  return {11, "metamorphic relations",
          scale_err <= kScalingTol && trace_err <= kTraceTol && identical,
          "scaling_err=" + num(scale_err) + " trace_err=" + num(trace_err) +
              " deterministic=" + (identical ? "yes" : "no"),
          "scaling <= " + num(kScalingTol) + ", trace <= " + num(kTraceTol) +
              ", identical bytes"};
}

}  // namespace

CriterionResult run_criterion(int id, const BatteryOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = unweighted_energy(opts); break;
    case 2: r = lel_and_ie(opts); break;
    case 3: r = laplacian_brackets(opts); break;
    case 4: r = weighted_lel_ie(opts); break;
    case 5: r = distance_le_bracket(opts); break;
    case 6: r = weighted_energy(opts); break;
    case 7: r = dominance(opts); break;
    case 8: r = eigenvalue_bulk(opts); break;
    case 9: r = structure_audit(opts); break;
    case 10: r = oracle_suites(opts); break;
    case 11: r = metamorphic(opts); break;
    default: throw std::out_of_range("no criterion " + std::to_string(id));
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  log_line(opts, "criterion " + std::to_string(id) + " took " + num(secs) + " s");
  return r;
}

std::vector<CriterionResult> run_battery(const BatteryOptions& opts,
                                         const std::vector<int>& ids) {
  std::vector<int> order = ids;
  if (order.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) order.push_back(i);
  }
  std::vector<CriterionResult> out;
  for (int id : order) out.push_back(run_criterion(id, opts));
  return out;
}

std::string to_csv(const std::vector<CriterionResult>& results) {
  std::string out = "criterion,name,status,measured,threshold\n";
  for (const auto& r : results) {
    out += std::to_string(r.id) + "," + r.name + "," +
           (r.passed ? "PASS" : "FAIL") + ",\"" + r.measured + "\",\"" +
           r.threshold + "\"\n";
  }
  return out;
}

}  // namespace wle::verify
