#include <benchmark/benchmark.h>

#include "tempsep/expansion.hpp"
#include "tempsep/generators.hpp"
#include "tempsep/pathfinding.hpp"
#include "tempsep/temporal_graph.hpp"

using namespace tempsep;

namespace {

// Chain with one edge per layer: the strict path from vertex 0 to the
// last vertex has length |E|, the worst case for shortest strict paths.
TemporalGraph layered_chain(Length m) {
  std::vector<TimeEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (Length i = 0; i < m; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), i + 1});
  }
  return TemporalGraph(static_cast<VertexId>(m + 1), std::move(edges), m);
}

}  // namespace

static void BM_BuildExpansion(benchmark::State& state) {
  auto g = layered_chain(state.range(0));
  for (auto _ : state) {
    auto h = build_expansion(g, 0);
    benchmark::DoNotOptimize(h.num_arcs());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildExpansion)->Arg(1 << 16)->Arg(1 << 18)->Arg(1 << 20);

static void BM_Ssstp(benchmark::State& state) {
  auto g = layered_chain(state.range(0));
  for (auto _ : state) {
    auto table = ssstp(g, 0);
    benchmark::DoNotOptimize(table.dist.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ssstp)->Arg(1 << 16)->Arg(1 << 18)->Arg(1 << 20);

static void BM_SsstpDense(benchmark::State& state) {
  auto g = gen_random_temporal(static_cast<VertexId>(state.range(0)), 32,
                               {.edge_probability = 0.1, .seed = 99});
  for (auto _ : state) {
    auto table = ssstp(g, 0);
    benchmark::DoNotOptimize(table.dist.data());
  }
}
BENCHMARK(BM_SsstpDense)->Arg(64)->Arg(256)->Arg(1024);

static void BM_StrictEarliestArrival(benchmark::State& state) {
  auto g = layered_chain(state.range(0));
  for (auto _ : state) {
    auto arrival = strict_earliest_arrival(g, 0, {});
    benchmark::DoNotOptimize(arrival.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StrictEarliestArrival)->Arg(1 << 18)->Arg(1 << 20);

static void BM_NonstrictReachability(benchmark::State& state) {
  auto g = gen_random_temporal(static_cast<VertexId>(state.range(0)), 16,
                               {.edge_probability = 0.05, .seed = 7});
  for (auto _ : state) {
    auto mask = nonstrict_reachable(g, 0, {});
    benchmark::DoNotOptimize(mask.data());
  }
}
BENCHMARK(BM_NonstrictReachability)->Arg(128)->Arg(512);
