#pragma once

#include <nlohmann/json.hpp>

#include "wle/graph.hpp"
#include "wle/matrices.hpp"
#include "wle/spectral.hpp"
#include "wle/weights.hpp"

namespace wle {

/// sum |lambda_i|.
double energy(const Spectrum& s);

/// sum |lambda_i - mean|, for spectra of L_f or L_f^+.
double laplacian_energy(const Spectrum& s, WeightedMean mean);

/// sum sqrt|lambda_i|. Negative eigenvalues within 1e-9 * r(s) of zero are
/// rounding noise and contribute nothing.
double lel(const Spectrum& s);

/// lel() of the signless spectrum; no incidence matrix is ever formed.
inline double incidence_energy(const Spectrum& signless) {
  return lel(signless);
}

struct ReportMeta {
  std::string weight;
  std::size_t n = 0;
  std::size_t m = 0;
  Distance diameter = kUnreachable;
};

struct EnergyReport {
  double graph_energy = 0;               // E(W_f)
  double laplacian_energy = 0;           // LE_f
  double signless_laplacian_energy = 0;  // LE_f^+
  double lel = 0;                        // LEL_f
  double ie = 0;                         // IE_f
  double weighted_mean = 0;
  ReportMeta meta;
};

/// Flat object with the field names of EnergyReport plus a "meta" object.
nlohmann::json to_json(const EnergyReport& r);

/// Builds W_f, L_f, L_f^+ and runs the three eigensolves.
EnergyReport full_report(const Graph& g, const DistanceTable& dist,
                         const WeightFunction& w, const WeightContext& ctx);

/// Computes distances and the context from g.
EnergyReport full_report(const Graph& g, const WeightFunction& w);

}  // namespace wle
