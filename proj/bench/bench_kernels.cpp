// Serial reference vs OpenMP path for each data-parallel kernel.
// Run with OMP_NUM_THREADS set to compare scaling.

#include "rigid/families.hpp"
#include "rigid/gac.hpp"
#include "rigid/graph.hpp"
#include "rigid/kernels.hpp"
#include "rigid/rigidity.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace rigid;

Exec exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}

void BM_AllPairsDistances(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::all_pairs_distances(g, exec_of(state)));
  label(state);
}

void BM_AssembleStiffness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = path_graph(n, 3);
  std::mt19937_64 rng(1);
  const Eigen::MatrixXd p = Realization::uniform(n, 3, rng).coordinates();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::assemble_stiffness(g, p, exec_of(state)));
  label(state);
}

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::min_pairwise_vertex_cut(g, exec_of(state)));
  label(state);
}

void BM_EstimateGac(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  OptimizerConfig cfg;
  cfg.iterations = 100;
  cfg.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_gac(g, 2, cfg).value);
  label(state);
}

BENCHMARK(BM_AllPairsDistances)->ArgsProduct({{100, 400}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AssembleStiffness)->ArgsProduct({{50, 200}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_VertexConnectivity)->ArgsProduct({{20, 40}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EstimateGac)->ArgsProduct({{5, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
