#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "wle/energies.hpp"
#include "wle/matrices.hpp"
#include "wle/predictors.hpp"
#include "wle/spectral.hpp"

namespace wle {
namespace {

Graph k3() { return generate_gnp(3, 1.0, 0); }
Graph p2() {
  const std::array<Edge, 1> e{{{0, 1}}};
  return Graph::from_edges(2, e);
}
Graph p3() {
  const std::array<Edge, 2> e{{{0, 1}, {1, 2}}};
  return Graph::from_edges(3, e);
}

TEST(Energy, Examples) {
  EXPECT_DOUBLE_EQ(energy(Spectrum::from_values({1, -1})), 2.0);
  EXPECT_DOUBLE_EQ(energy(Spectrum::from_values({0, 0, 0})), 0.0);
  EXPECT_NEAR(energy(sym_eigenvalues(build_unweighted(k3()).adjacency)), 4.0, 1e-12);
}

TEST(LaplacianEnergy, Examples) {
  EXPECT_DOUBLE_EQ(laplacian_energy(Spectrum::from_values({3, 3, 0}), {2.0}), 4.0);
  EXPECT_DOUBLE_EQ(laplacian_energy(Spectrum::from_values({2, 0}), {1.0}), 2.0);
  EXPECT_NEAR(laplacian_energy(Spectrum::from_values({3, 2, 0}), {5.0 / 3}), 10.0 / 3, 1e-15);
}

TEST(LaplacianEnergy, PathHararyThroughPipeline) {
  const Graph g = p3();
  const DistanceTable d = bfs_all_pairs(g);
  const LaplacianFamily f = build_laplacian_family(
      build_weighted_distance(g, d, find_weight("harary"), context_for(g, d)));
  const Spectrum s = sym_eigenvalues(f.laplacian);
  EXPECT_NEAR(s[0], 3.0, 1e-12);
  EXPECT_NEAR(s[1], 2.0, 1e-12);
  EXPECT_NEAR(s[2], 0.0, 1e-12);
  EXPECT_NEAR(laplacian_energy(s, f.mean), 10.0 / 3, 1e-12);
}

TEST(Lel, Examples) {
  EXPECT_NEAR(lel(Spectrum::from_values({3, 3, 0})), 2 * std::sqrt(3.0), 1e-15);
  EXPECT_EQ(lel(Spectrum::from_values({0, 0})), 0.0);
  EXPECT_NEAR(incidence_energy(sym_eigenvalues(build_unweighted(k3()).signless)), 4.0, 1e-12);
}

TEST(Lel, AbsoluteValueForNegativeSpectra) {
  // Negative-definite L_f from a negative weight: sqrt|lambda| is taken.
  EXPECT_DOUBLE_EQ(lel(Spectrum::from_values({0, -4, -9})), 5.0);
}

TEST(Lel, RoundingNegativesContributeNothing) {
  EXPECT_DOUBLE_EQ(lel(Spectrum::from_values({4, -1e-14})), 2.0);
}

TEST(FullReport, CompleteGraph) {
  const EnergyReport r = full_report(k3(), find_weight("unweighted"));
  EXPECT_NEAR(r.graph_energy, 4.0, 1e-12);
  EXPECT_NEAR(r.laplacian_energy, 4.0, 1e-12);
  EXPECT_NEAR(r.signless_laplacian_energy, 4.0, 1e-12);
  EXPECT_NEAR(r.lel, 2 * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(r.ie, 4.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.weighted_mean, 2.0);
  EXPECT_EQ(r.meta.n, 3u);
  EXPECT_EQ(r.meta.m, 3u);
  EXPECT_EQ(r.meta.diameter, 1);
  EXPECT_EQ(r.meta.weight, "unweighted");
}

TEST(FullReport, SingleEdge) {
  const EnergyReport r = full_report(p2(), find_weight("unweighted"));
  EXPECT_NEAR(r.graph_energy, 2.0, 1e-12);
  EXPECT_NEAR(r.laplacian_energy, 2.0, 1e-12);
  EXPECT_NEAR(r.lel, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(r.ie, std::sqrt(2.0), 1e-12);
}

TEST(FullReport, EmptyGraph) {
  const EnergyReport r = full_report(Graph(3), find_weight("unweighted"));
  EXPECT_EQ(r.graph_energy, 0.0);
  EXPECT_EQ(r.laplacian_energy, 0.0);
  EXPECT_EQ(r.signless_laplacian_energy, 0.0);
  EXPECT_EQ(r.lel, 0.0);
  EXPECT_EQ(r.ie, 0.0);
  EXPECT_EQ(r.meta.diameter, kUnreachable);
}

TEST(FullReport, PathHarary) {
  const EnergyReport r = full_report(p3(), find_weight("harary"));
  EXPECT_NEAR(r.lel, std::sqrt(3.0) + std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(r.laplacian_energy, 10.0 / 3, 1e-12);
}

TEST(FullReport, DisconnectedDistanceWeightThrows) {
  const std::array<Edge, 2> e{{{0, 1}, {2, 3}}};
  EXPECT_THROW(full_report(Graph::from_edges(4, e), find_weight("rcw")),
               DisconnectedGraphError);
}

TEST(FullReport, JsonFieldNames) {
  const nlohmann::json j = to_json(full_report(k3(), find_weight("unweighted")));
  for (const char* key : {"graph_energy", "laplacian_energy", "signless_laplacian_energy",
                          "lel", "ie", "weighted_mean", "meta"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["meta"]["diameter"], 1);
  const nlohmann::json d = to_json(full_report(Graph(3), find_weight("unweighted")));
  EXPECT_TRUE(d["meta"]["diameter"].is_null());
}

class RandomReport : public ::testing::TestWithParam<const char*> {};

TEST_P(RandomReport, Invariants) {
  const WeightFunction w = find_weight(GetParam());
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Graph g = generate_gnp(50, 0.5, seed);
    const DistanceTable d = bfs_all_pairs(g);
    if (!graph_stats(g, d).connected) continue;
    const WeightContext ctx = context_for(g, d);
    const SymMatrix wm = build_weighted_distance(g, d, w, ctx);
    const LaplacianFamily f = build_laplacian_family(wm);
    const Spectrum ls = sym_eigenvalues(f.laplacian);

    // LE_f = 2 * sum over eigenvalues above the mean.
    double upper = 0;
    for (double v : ls.values()) upper += std::max(0.0, v - f.mean.value);
    const double le = laplacian_energy(ls, f.mean);
    EXPECT_NEAR(le, 2 * upper, 1e-9 * le);

    // Nonnegative weights give a PSD L_f.
    EXPECT_GE(ls[ls.size() - 1], -1e-9 * f.laplacian.frobenius_norm());

    // Scaling covariance with c = 4.
    const EnergyReport a = full_report(g, d, w, ctx);
    const EnergyReport b = full_report(g, d, w.scaled(4.0), ctx);
    EXPECT_NEAR(b.graph_energy, 4 * a.graph_energy, 1e-9 * b.graph_energy);
    EXPECT_NEAR(b.laplacian_energy, 4 * a.laplacian_energy, 1e-9 * b.laplacian_energy);
    EXPECT_NEAR(b.signless_laplacian_energy, 4 * a.signless_laplacian_energy,
                1e-9 * b.signless_laplacian_energy);
    EXPECT_NEAR(b.lel, 2 * a.lel, 1e-9 * b.lel);
    EXPECT_NEAR(b.ie, 2 * a.ie, 1e-9 * b.ie);

    // All fields finite and nonnegative.
    for (double v : {a.graph_energy, a.laplacian_energy, a.signless_laplacian_energy,
                     a.lel, a.ie, a.weighted_mean}) {
      EXPECT_TRUE(std::isfinite(v));
      EXPECT_GE(v, 0.0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Weights, RandomReport,
                         ::testing::Values("unweighted", "harary", "hyper_wiener",
                                           "gutman", "first_zagreb", "randic",
                                           "reverse_wiener", "add_harary"));

TEST(FullReport, UnweightedMatchesClassicalDefinitions) {
  const Graph g = generate_gnp(40, 0.3, 9);
  const UnweightedFamily u = build_unweighted(g);
  const EnergyReport r = full_report(g, find_weight("unweighted"));
  const double mean = 2.0 * g.size() / 40;
  EXPECT_NEAR(r.graph_energy, energy(sym_eigenvalues(u.adjacency)), 1e-9);
  EXPECT_NEAR(r.laplacian_energy, laplacian_energy(sym_eigenvalues(u.laplacian), {mean}), 1e-9);
  EXPECT_NEAR(r.ie, lel(sym_eigenvalues(u.signless)), 1e-9);
  EXPECT_DOUBLE_EQ(r.weighted_mean, mean);
}

TEST(Margin, SmallGraphsTie) {
  EXPECT_NEAR(conjecture_margin(full_report(k3(), find_weight("unweighted"))), 0.0, 1e-12);
  EXPECT_NEAR(conjecture_margin(full_report(p2(), find_weight("unweighted"))), 0.0, 1e-12);
}

TEST(Margin, PositiveOnModerateRandomGraph) {
  EXPECT_GT(conjecture_margin(full_report(generate_gnp(400, 0.5, 1),
                                          find_weight("unweighted"))),
            0.0);
}

}  // namespace
}  // namespace wle
