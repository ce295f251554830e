#include "wle/energies.hpp"

#include <cmath>

namespace wle {

double energy(const Spectrum& s) {
  double total = 0;
  for (double v : s.values()) total += std::abs(v);
  return total;
}

double laplacian_energy(const Spectrum& s, WeightedMean mean) {
  double total = 0;
  for (double v : s.values()) total += std::abs(v - mean.value);
  return total;
}

double lel(const Spectrum& s) {
  if (s.empty()) return 0.0;
  const double noise = 1e-9 * spectral_radius(s);
  double total = 0;
  for (double v : s.values()) {
    if (v < 0 && v >= -noise) continue;
    total += std::sqrt(std::abs(v));
  }
  return total;
}

nlohmann::json to_json(const EnergyReport& r) {
  nlohmann::json meta = {{"weight", r.meta.weight},
                         {"n", r.meta.n},
                         {"m", r.meta.m}};
  if (r.meta.diameter == kUnreachable) {
    meta["diameter"] = nullptr;
  } else {
    meta["diameter"] = r.meta.diameter;
  }
  return {{"graph_energy", r.graph_energy},
          {"laplacian_energy", r.laplacian_energy},
          {"signless_laplacian_energy", r.signless_laplacian_energy},
          {"lel", r.lel},
          {"ie", r.ie},
          {"weighted_mean", r.weighted_mean},
          {"meta", meta}};
}

EnergyReport full_report(const Graph& g, const DistanceTable& dist,
                         const WeightFunction& w, const WeightContext& ctx) {
  const SymMatrix weights = build_weighted_distance(g, dist, w, ctx);
  const LaplacianFamily fam = build_laplacian_family(weights);
  const Spectrum ws = sym_eigenvalues(weights);
  const Spectrum ls = sym_eigenvalues(fam.laplacian);
  const Spectrum ps = sym_eigenvalues(fam.signless);

  EnergyReport r;
  r.graph_energy = energy(ws);
  r.laplacian_energy = laplacian_energy(ls, fam.mean);
  r.signless_laplacian_energy = laplacian_energy(ps, fam.mean);
  r.lel = lel(ls);
  r.ie = incidence_energy(ps);
  r.weighted_mean = fam.mean.value;
  r.meta = {w.name(), g.order(), g.size(), ctx.diameter};
  return r;
}

EnergyReport full_report(const Graph& g, const WeightFunction& w) {
  const DistanceTable dist = bfs_all_pairs(g);
  return full_report(g, dist, w, context_for(g, dist));
}

}  // namespace wle
