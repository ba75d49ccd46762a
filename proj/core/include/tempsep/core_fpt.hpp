#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tempsep/instance.hpp"
#include "tempsep/static_graph.hpp"
#include "tempsep/temporal_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

/// Static graph of the edges present in every one of the tau layers.
StaticGraph maximal_static_subgraph(const TemporalGraph& g);

/// One guess of the core pipeline: the deleted core vertices S_W and a
/// partition of the rest with s and z in different blocks.
struct PartitionState {
  std::vector<VertexId> s_w;               // sorted subset of W \ {s,z}
  std::vector<std::vector<VertexId>> blocks;  // nonempty, pairwise disjoint
  std::size_t s_block = 0;
  std::size_t z_block = 0;
};

/// Streams every (S_W, partition) pair with |S_W| <= k and s,z in
/// distinct blocks: subsets in increasing popcount then numeric order,
/// partitions as restricted-growth strings in lexicographic order. The
/// visitor returns false to stop. Requires s,z in W.
void enumerate_partition_states(const std::vector<VertexId>& w, VertexId s, VertexId z,
                                Length k,
                                const std::function<bool(const PartitionState&)>& visit);

/// Quotient of the maximal static subgraph: a copy without W, a terminal
/// w_i per block adjacent to the block's outside neighborhood, and
/// terminal-terminal edges for blocks adjacent inside W. Terminal ids
/// are n .. n+r-1; W members stay as isolated padding ids.
struct QuotientGraph {
  StaticGraph graph;
  std::vector<VertexId> terminals;
};

QuotientGraph build_quotient_graph(const StaticGraph& static_subgraph,
                                   const PartitionState& state,
                                   const std::vector<VertexId>& w);

struct NWCInstance {
  StaticGraph graph;
  std::vector<VertexId> terminals;
  Length budget = 0;
};

/// Exact Node Multiway Cut: a minimum vertex set outside the terminals
/// whose removal pairwise disconnects them, or nullopt when none of size
/// <= budget exists (adjacent terminals are permanently uncuttable).
/// Branches on the interior of a shortest path between a connected
/// terminal pair, with memoized infeasibility and a max-flow lower bound.
std::optional<std::vector<VertexId>> solve_nwc(const NWCInstance& inst);

struct CoreFptOptions {
  /// Abort when the temporal core (with terminals included) is larger.
  std::size_t max_core = 16;
  /// Partition states evaluated concurrently when > 1. The decision and
  /// the reported separator are schedule-independent: successes are
  /// reduced to the lexicographically smallest successful state.
  int threads = 1;
};

/// Non-strict temporal (s,z)-separation parameterized by the temporal
/// core: guesses the core partition, reduces to Node Multiway Cut on the
/// quotient of the maximal static subgraph, and verifies each candidate
/// against non-strict reachability. s and z are treated as honorary core
/// members. Throws std::invalid_argument when the core exceeds max_core.
SeparatorResult solve_core_fpt(const SeparatorInstance& inst,
                               const CoreFptOptions& options = {});

}  // namespace tempsep
