#include <benchmark/benchmark.h>

#include <string>

#include "pathhopf/essential.hpp"
#include "pathhopf/graph.hpp"
#include "pathhopf/weak_hopf.hpp"

namespace {

pathhopf::Graph fixture(const char* name) { return pathhopf::load_graph(std::string(PATHHOPF_GRAPH_DIR) + "/" + name); }

const char* kGraphs[] = {"a3.json", "a_aff_2.json", "d4.json"};

void BM_EssentialBasis(benchmark::State& state) {
  const pathhopf::PathSpace s(fixture(kGraphs[state.range(0)]));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pathhopf::essential_basis(s, n));
  state.SetLabel(kGraphs[state.range(0)]);
}
BENCHMARK(BM_EssentialBasis)->ArgsProduct({{0, 1, 2}, {2, 4}});

void BM_DecomposeAllPaths(benchmark::State& state) {
  const pathhopf::PathSpace s(fixture(kGraphs[state.range(0)]));
  const auto paths = pathhopf::enumerate_paths(s.graph(), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    for (const auto& p : paths) benchmark::DoNotOptimize(pathhopf::decompose(s, pathhopf::PathVector(p)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(paths.size()));
  state.SetLabel(kGraphs[state.range(0)]);
}
BENCHMARK(BM_DecomposeAllPaths)->ArgsProduct({{0, 1, 2}, {4, 6}});

// full product table from a cold algebra: every pair of matrix units up to max_length
void BM_ProductTable(benchmark::State& state) {
  const auto g = fixture(kGraphs[state.range(0)]);
  const int max_length = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const pathhopf::WeakHopfAlgebra alg(g);
    const auto keys = alg.basis_elements(max_length);
    for (const auto& a : keys) {
      for (const auto& b : keys) benchmark::DoNotOptimize(alg.basis_product(a, b));
    }
  }
  state.SetLabel(kGraphs[state.range(0)]);
}
BENCHMARK(BM_ProductTable)->Args({0, 2})->Args({1, 1})->Args({2, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
