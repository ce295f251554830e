#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "wle/energies.hpp"
#include "wle/experiments.hpp"
#include "wle/graph.hpp"
#include "wle/matrices.hpp"
#include "wle/predictors.hpp"
#include "wle/rng.hpp"
#include "wle/spectral.hpp"
#include "wle/verify/battery.hpp"
#include "wle/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

// Seed stream for redraws of disconnected samples under
// --resample-disconnected.
constexpr std::uint64_t kRedrawStream = 0xd15c0ULL;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GraphSource {
  std::string path;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool resample = false;
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--graph", src.path, "Edge-list file")->check(CLI::ExistingFile);
  cmd->add_option("--n", src.n, "Order of a generated G(n,p)");
  cmd->add_option("--p", src.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", src.seed, "Generator seed");
  cmd->add_flag("--resample-disconnected", src.resample,
                "Redraw disconnected samples instead of failing");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& data) {
  if (out_path.empty()) {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << data;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Loads or generates the graph. For distance-dependent weights a disconnected
// draw is redrawn only when the user asked for it.
wle::Graph load_graph(const GraphSource& src, const wle::WeightFunction& w,
                      bool needs_connected) {
  if (!src.path.empty()) {
    if (src.n != 0) throw UsageError("--graph and --n are mutually exclusive");
    return wle::read_edge_list(read_file(src.path));
  }
  if (src.n == 0) throw UsageError("either --graph or --n is required");
  wle::Graph g = wle::generate_gnp(src.n, src.p, src.seed);
  if (!needs_connected || !src.resample) return g;
  for (std::size_t retry = 1;; ++retry) {
    if (wle::graph_stats(g, wle::bfs_all_pairs(g)).connected) return g;
    if (retry > wle::kMaxResamples) {
      throw wle::DisconnectedGraphError(w.name());
    }
    g = wle::generate_gnp(src.n, src.p,
                          wle::stable_mix(src.seed, kRedrawStream, retry));
  }
}

wle::SymMatrix select_matrix(const std::string& which, const wle::Graph& g,
                             const wle::WeightFunction& w) {
  if (which == "A" || which == "L" || which == "L+") {
    wle::UnweightedFamily fam = wle::build_unweighted(g);
    if (which == "A") return fam.adjacency;
    if (which == "L") return fam.laplacian;
    return fam.signless;
  }
  const wle::DistanceTable d = wle::bfs_all_pairs(g);
  const wle::WeightContext ctx = wle::context_for(g, d);
  wle::SymMatrix wm = wle::build_weighted_distance(g, d, w, ctx);
  if (which == "Wf") return wm;
  wle::LaplacianFamily fam = wle::build_laplacian_family(wm);
  if (which == "Lf") return fam.laplacian;
  return fam.signless;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Laplacian-type energies of random graphs"};
  app.require_subcommand(1);
  app.allow_extras(false);

  std::string out_path;
  double alpha = 0.5;

  // gen
  auto* gen = app.add_subcommand("gen", "Sample G(n,p) as an edge list");
  std::size_t gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  gen->add_option("--n", gen_n, "Order")->required();
  gen->add_option("--p", gen_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of one matrix, one per line");
  GraphSource spec_src;
  std::string spec_weight = "unweighted";
  std::string spec_matrix = "Wf";
  bool dump = false;
  add_graph_source(spectrum, spec_src);
  spectrum->add_option("--weight", spec_weight, "Weight name");
  spectrum->add_option("--alpha", alpha, "general_randic exponent");
  spectrum->add_option("--matrix", spec_matrix, "Matrix")
      ->check(CLI::IsMember({"A", "L", "L+", "Wf", "Lf", "Lf+"}));
  spectrum->add_flag("--dump-matrix", dump, "Print the matrix instead of its spectrum");
  spectrum->add_option("--out", out_path, "Output file (default stdout)");

  // energy
  auto* energy = app.add_subcommand("energy", "Energy report as JSON");
  GraphSource en_src;
  std::string en_weight;
  add_graph_source(energy, en_src);
  energy->add_option("--weight", en_weight, "Weight name")->required();
  energy->add_option("--alpha", alpha, "general_randic exponent");
  energy->add_option("--out", out_path, "Output file (default stdout)");

  // predict
  auto* predict = app.add_subcommand("predict", "Leading-order predictions as JSON");
  std::string pr_weight, pr_quantity;
  double pr_n = 0, pr_p = 0;
  predict->add_option("--weight", pr_weight, "Weight name")->required();
  predict->add_option("--n", pr_n, "Order")->required();
  predict->add_option("--p", pr_p, "Edge probability")->required();
  predict->add_option("--quantity", pr_quantity,
                      "E_adj, E_Wf, LE_f, LE_plus_f, LEL_f or IE_f (default all)");
  predict->add_option("--alpha", alpha, "general_randic exponent");
  predict->add_option("--out", out_path, "Output file (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a configured experiment grid");
  std::string config_path, format = "csv";
  unsigned jobs = 0;
  sweep->add_option("--config", config_path, "Sweep configuration file")
      ->required()->check(CLI::ExistingFile);
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--jobs", jobs, "Worker threads (default: all cores)");
  sweep->add_option("--out", out_path, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the acceptance battery");
  bool fast = false;
  std::vector<int> criteria;
  std::uint64_t verify_seed = wle::verify::BatteryOptions{}.master_seed;
  verify->add_flag("--fast", fast, "Reduced n and trial counts");
  verify->add_option("--criterion", criteria, "Run only these criteria")
      ->check(CLI::Range(1, wle::verify::kCriterionCount));
  verify->add_option("--seed", verify_seed, "Master seed");
  verify->add_option("--jobs", jobs, "Worker threads (default: all cores)");
  verify->add_option("--out", out_path, "Output file (default stdout)");

  // esd
  auto* esd = app.add_subcommand("esd", "Histogram of the scaled spectrum as CSV");
  GraphSource esd_src;
  std::string esd_matrix = "A", esd_weight = "unweighted", esd_scaling = "none";
  std::size_t bins = 40;
  add_graph_source(esd, esd_src);
  esd->add_option("--matrix", esd_matrix, "Matrix")
      ->check(CLI::IsMember({"A", "L", "L+", "Wf", "Lf", "Lf+"}));
  esd->add_option("--weight", esd_weight, "Weight name for Wf, Lf, Lf+");
  esd->add_option("--alpha", alpha, "general_randic exponent");
  esd->add_option("--bins", bins, "Number of bins")->check(CLI::PositiveNumber);
  esd->add_option("--scaling", esd_scaling, "none, sqrt_n, n or semicircle")
      ->check(CLI::IsMember({"none", "sqrt_n", "n", "semicircle"}));
  esd->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      emit(out_path, wle::write_edge_list(wle::generate_gnp(gen_n, gen_p, gen_seed)));
      return kExitOk;
    }

    if (*spectrum) {
      const wle::WeightFunction w = wle::find_weight(spec_weight, alpha);
      const bool needs = spec_matrix != "A" && spec_matrix != "L" &&
                         spec_matrix != "L+" && !w.adjacency_only();
      const wle::Graph g = load_graph(spec_src, w, needs);
      const wle::SymMatrix m = select_matrix(spec_matrix, g, w);
      if (dump) {
        emit(out_path, wle::dump_matrix(m));
        return kExitOk;
      }
      std::string text;
      const wle::Spectrum s = wle::sym_eigenvalues(m);
      for (double v : s.values()) text += fmt(v) + "\n";
      emit(out_path, text);
      return kExitOk;
    }

    if (*energy) {
      const wle::WeightFunction w = wle::find_weight(en_weight, alpha);
      const wle::Graph g = load_graph(en_src, w, !w.adjacency_only());
      emit(out_path, wle::to_json(wle::full_report(g, w)).dump(2) + "\n");
      return kExitOk;
    }

    if (*predict) {
      const wle::WeightFunction w = wle::find_weight(pr_weight, alpha);
      nlohmann::json out;
      if (!pr_quantity.empty()) {
        out = wle::to_json(wle::predict(wle::parse_quantity(pr_quantity), w, pr_n, pr_p));
      } else {
        out = nlohmann::json::array();
        for (wle::Quantity q : wle::kAllQuantities) {
          if (q == wle::Quantity::EAdj && !w.adjacency_only()) continue;
          out.push_back(wle::to_json(wle::predict(q, w, pr_n, pr_p)));
        }
      }
      emit(out_path, out.dump(2) + "\n");
      return kExitOk;
    }

    if (*sweep) {
      const wle::SweepConfig cfg = wle::parse_sweep_config(read_file(config_path));
      const wle::SweepResult r = wle::run_sweep(cfg, resolve_jobs(jobs));
      if (format == "csv") {
        emit(out_path, wle::write_csv(r.records, cfg));
      } else {
        nlohmann::json j;
        j["records"] = nlohmann::json::array();
        for (const auto& rec : r.records) j["records"].push_back(wle::to_json(rec));
        j["verdict"] = wle::to_json(r.verdict);
        emit(out_path, j.dump(2) + "\n");
      }
      if (r.verdict.failed_trials > 0) {
        std::cerr << r.verdict.failed_trials << " trial(s) failed\n";
      }
      return kExitOk;
    }

    if (*verify) {
      wle::verify::BatteryOptions opts;
      opts.fast = fast;
      opts.jobs = resolve_jobs(jobs);
      opts.master_seed = verify_seed;
      opts.log = &std::cerr;
      const auto results = wle::verify::run_battery(opts, criteria);
      emit(out_path, wle::verify::to_csv(results));
      bool all = true;
      for (const auto& r : results) {
        std::cerr << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id
                  << " (" << r.name << "): " << r.measured << " vs "
                  << r.threshold << "\n";
        all = all && r.passed;
      }
      return all ? kExitOk : kExitVerify;
    }

    if (*esd) {
      const wle::WeightFunction w = wle::find_weight(esd_weight, alpha);
      const bool needs = esd_matrix != "A" && esd_matrix != "L" &&
                         esd_matrix != "L+" && !w.adjacency_only();
      const wle::Graph g = load_graph(esd_src, w, needs);
      const wle::Spectrum s = wle::sym_eigenvalues(select_matrix(esd_matrix, g, w));
      wle::EsdScaling scaling = wle::EsdScaling::None;
      if (esd_scaling == "sqrt_n") scaling = wle::EsdScaling::InvSqrtN;
      if (esd_scaling == "n") scaling = wle::EsdScaling::InvN;
      if (esd_scaling == "semicircle") scaling = wle::EsdScaling::Semicircle;
      emit(out_path, wle::esd_histogram(s, bins, scaling, esd_src.p).to_csv());
      return kExitOk;
    }
  } catch (const wle::DisconnectedGraphError& e) {
    std::cerr << "error: " << e.what()
              << "; pass --resample-disconnected to redraw generated graphs, or "
                 "use a weight that depends on adjacency only\n";
    return kExitDomain;
  } catch (const wle::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wle::WeightDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
