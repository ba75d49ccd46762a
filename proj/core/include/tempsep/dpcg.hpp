#pragma once

#include <utility>
#include <vector>

#include "tempsep/max_flow.hpp"
#include "tempsep/pathfinding.hpp"
#include "tempsep/temporal_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

/// Per-vertex distance pair (i, j): i = shortest strict (s,v)-path
/// length, j = shortest strict (v,z)-path length. On a reduced graph
/// with tau = 4, every non-isolated vertex outside {s,z} falls in
/// {(1,3),(2,2),(3,1),(1,2),(2,1)} and (1,1) never occurs.
struct DistancePairClass {
  DistanceTable from_s;
  DistanceTable to_z;

  std::pair<Length, Length> of(VertexId v) const { return {from_s[v], to_z[v]}; }
};

/// Digraph over the original vertices whose static (s,z)-separators
/// coincide with the strict temporal (s,z)-separators of the reduced
/// tau=4 input.
struct DirectedPathCoverGraph {
  Digraph digraph;
  DistancePairClass classes;
  VertexId s = 0;
  VertexId z = 0;
};

/// Builds the directed path cover graph of a reduced temporal graph with
/// tau = 4. Throws std::invalid_argument on tau != 4 or when the reduced
/// properties fail, and std::logic_error if a vertex classifies as (1,1).
DirectedPathCoverGraph build_dpcg(const TemporalGraph& g, VertexId s, VertexId z);

}  // namespace tempsep
