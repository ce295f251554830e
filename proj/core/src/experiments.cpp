#include "wle/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "wle/energies.hpp"
#include "wle/graph.hpp"
#include "wle/matrices.hpp"
#include "wle/rng.hpp"
#include "wle/spectral.hpp"

namespace wle {

namespace {

// Stream tag for resampled draws of a trial, so retries never collide with
// another trial's seed.
constexpr std::uint64_t kResampleStream = 0x7265'7361'6d70'6c65ULL;

bool wants(const SweepConfig& cfg, Quantity q) {
  return std::find(cfg.quantities.begin(), cfg.quantities.end(), q) !=
         cfg.quantities.end();
}

struct CellPredictions {
  std::map<Quantity, Prediction> by_quantity;
  std::optional<double> bulk_center;
  std::optional<ExcludeExtremes> bulk_exclude;
};

CellPredictions predict_cell(const SweepConfig& cfg, const WeightFunction& w,
                             std::size_t n) {
  CellPredictions out;
  const double nn = static_cast<double>(n);
  for (Quantity q : cfg.quantities) {
    try {
      out.by_quantity.emplace(q, predict(q, w, nn, cfg.p));
    } catch (const std::invalid_argument&) {
      // Not applicable to this weight (e.g. E_adj of a distance weight).
    } catch (const WeightDomainError&) {
    }
  }
  try {
    out.bulk_center = predict_bulk_eigenvalue(w, nn, cfg.p);
    out.bulk_exclude = bulk_exclusions(w, nn, cfg.p);
  } catch (const std::exception&) {
  }
  return out;
}

TrialRecord run_trial(const SweepConfig& cfg, const WeightFunction& w,
                      std::size_t n, const CellPredictions& pred,
                      std::uint64_t cell, std::size_t trial) {
  TrialRecord rec;
  rec.weight = w.name();
  rec.n = n;
  rec.p = cfg.p;
  rec.trial_index = trial;
  rec.seed = stable_mix(cfg.master_seed, cell, trial);
  rec.predicted = pred.by_quantity;

  std::uint64_t graph_seed = rec.seed;
  Graph g = generate_gnp(n, cfg.p, graph_seed);
  DistanceTable dist = bfs_all_pairs(g);
  GraphStats stats = graph_stats(g, dist);
  while (!stats.connected && !w.adjacency_only()) {
    if (!cfg.resample_disconnected || rec.connected_retries >= kMaxResamples) {
      rec.failure = "disconnected sample for distance-dependent weight";
      if (cfg.resample_disconnected) rec.failure += " (resample cap reached)";
      return rec;
    }
    ++rec.connected_retries;
    graph_seed = stable_mix(rec.seed, kResampleStream, rec.connected_retries);
    g = generate_gnp(n, cfg.p, graph_seed);
    dist = bfs_all_pairs(g);
    stats = graph_stats(g, dist);
  }
  rec.diameter = stats.diameter;
  const WeightContext ctx{n, stats.diameter.value_or(kUnreachable)};

  try {
    const SymMatrix wm = build_weighted_distance(g, dist, w, ctx);
    const LaplacianFamily fam = build_laplacian_family(wm);
    const Spectrum ls = sym_eigenvalues(fam.laplacian);

    std::optional<Spectrum> ws;
    if (wants(cfg, Quantity::EWf) ||
        (wants(cfg, Quantity::EAdj) && wm.kind() == MatrixKind::Af)) {
      ws = sym_eigenvalues(wm);
    }
    if (wants(cfg, Quantity::EWf)) rec.empirical[Quantity::EWf] = energy(*ws);
    if (wants(cfg, Quantity::EAdj)) {
      rec.empirical[Quantity::EAdj] =
          wm.kind() == MatrixKind::Af
              ? energy(*ws)
              : energy(sym_eigenvalues(restrict_to_adjacency(wm, g)));
    }
    if (wants(cfg, Quantity::LEf)) {
      rec.empirical[Quantity::LEf] = laplacian_energy(ls, fam.mean);
    }
    if (wants(cfg, Quantity::LELf)) rec.empirical[Quantity::LELf] = lel(ls);
    if (wants(cfg, Quantity::LEPlusf) || wants(cfg, Quantity::IEf)) {
      const Spectrum ps = sym_eigenvalues(fam.signless);
      if (wants(cfg, Quantity::LEPlusf)) {
        rec.empirical[Quantity::LEPlusf] = laplacian_energy(ps, fam.mean);
      }
      if (wants(cfg, Quantity::IEf)) {
        rec.empirical[Quantity::IEf] = incidence_energy(ps);
      }
    }
    if (pred.bulk_center && pred.bulk_exclude &&
        pred.bulk_exclude->largest + pred.bulk_exclude->smallest < n) {
      rec.bulk_fraction = bulk_fraction(ls, *pred.bulk_center, kBulkTolerance,
                                        *pred.bulk_exclude);
    }
  } catch (const WeightDomainError& e) {
    rec.empirical.clear();
    rec.failure = e.what();
    return rec;
  }

  for (const auto& [q, value] : rec.empirical) {
    auto it = rec.predicted.find(q);
    if (it != rec.predicted.end() && it->second.value &&
        *it->second.value != 0.0) {
      rec.ratio[q] = value / *it->second.value;
    }
  }
  return rec;
}

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

void SweepConfig::validate() const {
  if (weight_names.empty()) {
    throw std::invalid_argument("sweep: at least one weight is required");
  }
  for (const auto& name : weight_names) (void)find_weight(name, alpha);
  if (n_values.empty()) {
    throw std::invalid_argument("sweep: at least one n value is required");
  }
  for (std::size_t n : n_values) {
    if (n < 2) throw std::invalid_argument("sweep: every n must be >= 2");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("sweep: p must lie in (0, 1)");
  }
  if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  if (quantities.empty()) {
    throw std::invalid_argument("sweep: at least one quantity is required");
  }
  if (!(tolerance >= 0) || !(bracket_slack >= 0)) {
    throw std::invalid_argument("sweep: tolerances must be nonnegative");
  }
}

SweepResult run_sweep(const SweepConfig& cfg, unsigned jobs) {
  cfg.validate();
  std::vector<WeightFunction> weights;
  for (const auto& name : cfg.weight_names) {
    weights.push_back(find_weight(name, cfg.alpha));
  }
  const std::size_t cells = weights.size() * cfg.n_values.size();
  std::vector<CellPredictions> preds;
  preds.reserve(cells);
  for (const auto& w : weights) {
    for (std::size_t n : cfg.n_values) preds.push_back(predict_cell(cfg, w, n));
  }

  const std::size_t tasks = cells * cfg.trials;
  std::vector<TrialRecord> records(tasks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t task = next.fetch_add(1);
      if (task >= tasks) return;
      const std::size_t cell = task / cfg.trials;
      const std::size_t trial = task % cfg.trials;
      const auto& w = weights[cell / cfg.n_values.size()];
      const std::size_t n = cfg.n_values[cell % cfg.n_values.size()];
      try {
        records[task] = run_trial(cfg, w, n, preds[cell], cell, trial);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(tasks);
      }
    }
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  SweepResult result;
  result.verdict = summarize(records, cfg);
  result.records = std::move(records);
  return result;
}

BatchVerdict summarize(const std::vector<TrialRecord>& records,
                       const SweepConfig& cfg) {
  BatchVerdict v;
  for (const auto& name : cfg.weight_names) {
    for (std::size_t n : cfg.n_values) {
      std::vector<const TrialRecord*> ok;
      const TrialRecord* any = nullptr;
      for (const auto& r : records) {
        if (r.weight != name || r.n != n) continue;
        any = &r;
        if (r.failed()) {
          ++v.failed_trials;
        } else {
          ok.push_back(&r);
        }
      }
      for (Quantity q : cfg.quantities) {
        VerdictEntry e;
        e.weight = name;
        e.n = n;
        e.quantity = q;
        std::vector<double> emp, ratio;
        const Prediction* pred = nullptr;
        if (any) {
          if (auto it = any->predicted.find(q); it != any->predicted.end()) {
            pred = &it->second;
          }
        }
        for (const TrialRecord* r : ok) {
          if (auto it = r->empirical.find(q); it != r->empirical.end()) {
            emp.push_back(it->second);
          }
          if (auto it = r->ratio.find(q); it != r->ratio.end()) {
            ratio.push_back(it->second);
          }
        }
        e.trials = emp.size();
        for (double x : emp) e.mean_empirical += x;
        if (!emp.empty()) e.mean_empirical /= static_cast<double>(emp.size());
        if (!ratio.empty()) {
          double mean = 0;
          for (double x : ratio) mean += x;
          mean /= static_cast<double>(ratio.size());
          double var = 0;
          for (double x : ratio) var += (x - mean) * (x - mean);
          e.mean_ratio = mean;
          e.sd_ratio = ratio.size() > 1
                           ? std::sqrt(var / static_cast<double>(ratio.size() - 1))
                           : 0.0;
        }
        if (pred && pred->bracket) e.bracket = pred->bracket;
        if (e.mean_ratio) {
          e.pass = std::abs(*e.mean_ratio - 1.0) <= cfg.tolerance;
        } else if (e.bracket) {
          e.pass = !emp.empty() &&
                   e.mean_empirical >=
                       e.bracket->lower * (1 - cfg.bracket_slack) &&
                   e.mean_empirical <= e.bracket->upper * (1 + cfg.bracket_slack);
        } else if (pred && pred->value) {
          e.pass = false;  // no successful trial produced a ratio
        }
        v.entries.push_back(e);
      }
      BulkEntry b{name, n, 0.0, 0.0};
      std::size_t counted = 0, passed = 0;
      for (const TrialRecord* r : ok) {
        if (!r->bulk_fraction) continue;
        ++counted;
        b.mean_fraction += *r->bulk_fraction;
        if (*r->bulk_fraction >= kBulkPassFraction) ++passed;
      }
      if (counted > 0) {
        b.mean_fraction /= static_cast<double>(counted);
        b.pass_rate = static_cast<double>(passed) / static_cast<double>(counted);
      }
      v.bulk.push_back(b);
    }
  }
  return v;
}

const VerdictEntry* BatchVerdict::find(std::string_view weight, std::size_t n,
                                       Quantity q) const {
  for (const auto& e : entries) {
    if (e.weight == weight && e.n == n && e.quantity == q) return &e;
  }
  return nullptr;
}

const BulkEntry* BatchVerdict::find_bulk(std::string_view weight,
                                         std::size_t n) const {
  for (const auto& b : bulk) {
    if (b.weight == weight && b.n == n) return &b;
  }
  return nullptr;
}

ConjectureResult verify_conjecture(const SweepConfig& cfg, unsigned jobs) {
  SweepConfig c = cfg;
  for (Quantity q : {Quantity::EWf, Quantity::LEf}) {
    if (!wants(c, q)) c.quantities.push_back(q);
  }
  const SweepResult sweep = run_sweep(c, jobs);
  ConjectureResult out;
  out.trials = sweep.records.size();
  bool first = true;
  for (const auto& r : sweep.records) {
    if (r.failed()) continue;
    const double margin =
        r.empirical.at(Quantity::LEf) - r.empirical.at(Quantity::EWf);
    if (first || margin < out.min_margin) out.min_margin = margin;
    first = false;
    if (margin > 0) ++out.passed;
  }
  out.pass_rate = out.trials > 0 ? static_cast<double>(out.passed) /
                                       static_cast<double>(out.trials)
                                 : 0.0;
  return out;
}

AuditResult degree_diameter_audit(std::size_t n, double p, std::size_t trials,
                                  std::uint64_t master_seed) {
  AuditResult out;
  out.trials = trials;
  if (trials == 0) return out;
  const double np = static_cast<double>(n) * p;
  const double window = std::pow(static_cast<double>(n), 0.75);
  std::size_t degree_ok = 0, diameter_ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = generate_gnp(n, p, stable_mix(master_seed, 0, t));
    const GraphStats s = graph_stats(g, bfs_all_pairs(g));
    if (np - window < static_cast<double>(s.min_degree) &&
        static_cast<double>(s.max_degree) < np + window) {
      ++degree_ok;
    }
    if (s.diameter && *s.diameter == 2) ++diameter_ok;
  }
  out.degree_rate = static_cast<double>(degree_ok) / static_cast<double>(trials);
  out.diameter_rate =
      static_cast<double>(diameter_ok) / static_cast<double>(trials);
  return out;
}

std::string write_csv(const std::vector<TrialRecord>& records,
                      const SweepConfig& cfg) {
  std::string out = "# wle sweep master_seed=" +
                    std::to_string(cfg.master_seed) +
                    " tolerance=" + fmt_real(cfg.tolerance) +
                    " bracket_slack=" + fmt_real(cfg.bracket_slack) +
                    " bulk_tolerance=" + fmt_real(kBulkTolerance) +
                    " (tolerances are engineering choices)\n";
  out +=
      "weight,quantity,n,p,trial,seed,empirical,predicted,pred_lower,"
      "pred_upper,ratio,diameter,retries,bulk_fraction\n";
  for (const auto& r : records) {
    for (Quantity q : kAllQuantities) {
      if (!wants(cfg, q)) continue;
      std::string row = r.weight;
      row += ',';
      row += to_string(q);
      row += ',' + std::to_string(r.n) + ',' + fmt_real(r.p) + ',' +
             std::to_string(r.trial_index) + ',' + std::to_string(r.seed) + ',';
      if (auto it = r.empirical.find(q); it != r.empirical.end()) {
        row += fmt_real(it->second);
      }
      row += ',';
      const auto pit = r.predicted.find(q);
      const Prediction* pred = pit != r.predicted.end() ? &pit->second : nullptr;
      if (pred && pred->value) row += fmt_real(*pred->value);
      row += ',';
      if (pred && pred->bracket) row += fmt_real(pred->bracket->lower);
      row += ',';
      if (pred && pred->bracket) row += fmt_real(pred->bracket->upper);
      row += ',';
      if (auto it = r.ratio.find(q); it != r.ratio.end()) {
        row += fmt_real(it->second);
      }
      row += ',';
      if (r.diameter) row += std::to_string(*r.diameter);
      row += ',' + std::to_string(r.connected_retries) + ',';
      if (r.bulk_fraction) row += fmt_real(*r.bulk_fraction);
      out += row;
      out += '\n';
    }
  }
  return out;
}

nlohmann::json to_json(const TrialRecord& r) {
  nlohmann::json j = {{"weight", r.weight},
                      {"n", r.n},
                      {"p", r.p},
                      {"trial_index", r.trial_index},
                      {"seed", r.seed},
                      {"connected_retries", r.connected_retries}};
  j["diameter"] = r.diameter ? nlohmann::json(*r.diameter) : nlohmann::json(nullptr);
  j["bulk_fraction"] =
      r.bulk_fraction ? nlohmann::json(*r.bulk_fraction) : nlohmann::json(nullptr);
  nlohmann::json emp = nlohmann::json::object();
  for (const auto& [q, v] : r.empirical) emp[std::string(to_string(q))] = v;
  nlohmann::json pred = nlohmann::json::object();
  for (const auto& [q, v] : r.predicted) pred[std::string(to_string(q))] = to_json(v);
  nlohmann::json ratio = nlohmann::json::object();
  for (const auto& [q, v] : r.ratio) ratio[std::string(to_string(q))] = v;
  j["empirical"] = emp;
  j["predicted"] = pred;
  j["ratio"] = ratio;
  if (r.failed()) j["failure"] = r.failure;
  return j;
}

nlohmann::json to_json(const BatchVerdict& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : v.entries) {
    nlohmann::json j = {{"weight", e.weight},
                        {"n", e.n},
                        {"quantity", to_string(e.quantity)},
                        {"trials", e.trials},
                        {"mean_empirical", e.mean_empirical}};
    j["mean_ratio"] = e.mean_ratio ? nlohmann::json(*e.mean_ratio) : nlohmann::json(nullptr);
    j["sd_ratio"] = e.sd_ratio ? nlohmann::json(*e.sd_ratio) : nlohmann::json(nullptr);
    if (e.bracket) {
      j["bracket"] = {{"lower", e.bracket->lower}, {"upper", e.bracket->upper}};
    }
    j["pass"] = e.pass ? nlohmann::json(*e.pass) : nlohmann::json(nullptr);
    entries.push_back(j);
  }
  nlohmann::json bulk = nlohmann::json::array();
  for (const auto& b : v.bulk) {
    bulk.push_back({{"weight", b.weight},
                    {"n", b.n},
                    {"mean_fraction", b.mean_fraction},
                    {"pass_rate", b.pass_rate}});
  }
  return {{"entries", entries},
          {"bulk", bulk},
          {"failed_trials", v.failed_trials}};
}

}  // namespace wle
