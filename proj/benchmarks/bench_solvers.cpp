#include <benchmark/benchmark.h>

#include "tempsep/core_fpt.hpp"
#include "tempsep/generators.hpp"
#include "tempsep/instance.hpp"
#include "tempsep/preprocessing.hpp"
#include "tempsep/tau4.hpp"

using namespace tempsep;

static void BM_Tau4Solve(benchmark::State& state) {
  auto g = gen_random_temporal(static_cast<VertexId>(state.range(0)), 4,
                               {.edge_probability = 0.05, .seed = 3, .forbid_pair = true});
  SeparatorInstance inst(g, 0, 1, 8, PathModel::Strict);
  for (auto _ : state) {
    auto result = solve_strict_tau4(inst);
    benchmark::DoNotOptimize(result.feasible);
  }
}
BENCHMARK(BM_Tau4Solve)->Arg(32)->Arg(128)->Arg(512);

static void BM_ReduceInstance(benchmark::State& state) {
  auto g = gen_random_temporal(static_cast<VertexId>(state.range(0)), 4,
                               {.edge_probability = 0.05, .seed = 5, .forbid_pair = true});
  SeparatorInstance inst(g, 0, 1, 4, PathModel::Strict);
  for (auto _ : state) {
    auto outcome = reduce_instance(inst);
    benchmark::DoNotOptimize(outcome.kind);
  }
}
BENCHMARK(BM_ReduceInstance)->Arg(64)->Arg(256);

static void BM_CoreFpt(benchmark::State& state) {
  // Static backbone plus a small varying clique: core size == range(0).
  const VertexId n = 24;
  const auto varying = static_cast<VertexId>(state.range(0));
  // Static path s=0, 2, 3, ..., n-1, z=1, plus a varying clique at the end.
  std::vector<VertexId> order{0};
  for (VertexId v = 2; v < n; ++v) order.push_back(v);
  order.push_back(1);
  std::vector<TimeEdge> edges;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    for (TimeLabel t = 1; t <= 3; ++t) edges.push_back({order[i], order[i + 1], t});
  }
  for (VertexId u = n - varying; u < n; ++u) {
    for (VertexId v = static_cast<VertexId>(u + 1); v < n; ++v) {
      edges.push_back({u, v, 1});
      edges.push_back({u, v, 2});
    }
  }
  TemporalGraph g(n, std::move(edges), 3);
  SeparatorInstance inst(g, 0, 1, 2, PathModel::NonStrict);
  for (auto _ : state) {
    auto result = solve_core_fpt(inst);
    benchmark::DoNotOptimize(result.feasible);
  }
}
BENCHMARK(BM_CoreFpt)->Arg(3)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
