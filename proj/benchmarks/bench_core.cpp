#include <benchmark/benchmark.h>

#include "ssig/generators.hpp"
#include "ssig/isomorphism.hpp"
#include "ssig/ssi.hpp"
#include "ssig/theorems.hpp"

using namespace ssig;

static void BM_EnumerateArcs(benchmark::State& state) {
  const Graph g = make_complete(static_cast<int>(state.range(0)));
  const int s = 3;
  for (auto _ : state) {
    auto arcs = enumerate_arcs(g, s);
    benchmark::DoNotOptimize(arcs);
  }
}
BENCHMARK(BM_EnumerateArcs)->DenseRange(5, 8);

static void BM_BuildSsiCycle(benchmark::State& state) {
  const Graph g = make_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto a = build_ssi(g, 2);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_BuildSsiCycle)->DenseRange(6, 12, 2);

static void BM_BuildSsiCompleteDense(benchmark::State& state) {
  const Graph g = make_complete(6);
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto a = build_ssi(g, s);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_BuildSsiCompleteDense)->DenseRange(2, 5);

static void BM_DetourProfile(benchmark::State& state) {
  const Graph g = make_complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto d = detour_profile(g);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DetourProfile)->DenseRange(6, 9);

static void BM_AllConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto graphs = all_connected(n);
    benchmark::DoNotOptimize(graphs);
  }
}
BENCHMARK(BM_AllConnected)->DenseRange(4, 7);

static void BM_VerifyAll(benchmark::State& state) {
  const Graph g = make_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto reports = verify_all(g, "cycle");
    benchmark::DoNotOptimize(reports);
  }
}
BENCHMARK(BM_VerifyAll)->DenseRange(4, 7);

static void BM_IsomorphicPetersen(benchmark::State& state) {
  const Graph p = generate(GraphFamily{GraphFamily::Kind::Petersen, {}, {}})[0].graph;
  // A relabelled copy with the same structure.
  std::vector<std::string> labels;
  for (int i = 0; i < 10; ++i) labels.push_back("w" + std::to_string((i * 3) % 10));
  std::vector<std::pair<int, int>> edges = p.edges();
  const Graph q(labels, edges);
  for (auto _ : state) {
    bool iso = is_isomorphic(p, q);
    benchmark::DoNotOptimize(iso);
  }
}
BENCHMARK(BM_IsomorphicPetersen);

BENCHMARK_MAIN();
