#include <benchmark/benchmark.h>

#include "wle/energies.hpp"
#include "wle/graph.hpp"
#include "wle/matrices.hpp"
#include "wle/spectral.hpp"
#include "wle/weights.hpp"

namespace {

void BM_Gnp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(wle::generate_gnp(n, 0.5, ++seed));
}
BENCHMARK(BM_Gnp)->Arg(100)->Arg(400)->Arg(1000);

void BM_BfsAllPairs(benchmark::State& state) {
  const wle::Graph g = wle::generate_gnp(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(wle::bfs_all_pairs(g));
}
BENCHMARK(BM_BfsAllPairs)->Arg(100)->Arg(400)->Arg(1000);

void BM_Eigensolve(benchmark::State& state) {
  const wle::Graph g = wle::generate_gnp(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  const wle::SymMatrix l = wle::build_unweighted(g).laplacian;
  for (auto _ : state) benchmark::DoNotOptimize(wle::sym_eigenvalues(l));
}
BENCHMARK(BM_Eigensolve)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_FullReport(benchmark::State& state) {
  const wle::Graph g = wle::generate_gnp(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  const wle::WeightFunction w = wle::find_weight("harary");
  for (auto _ : state) benchmark::DoNotOptimize(wle::full_report(g, w));
}
BENCHMARK(BM_FullReport)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
