#pragma once

#include <optional>
#include <vector>

#include "tempsep/temporal_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

/// A (strict or non-strict) temporal (s,z)-separation instance.
struct SeparatorInstance {
  TemporalGraph graph;
  VertexId s = 0;
  VertexId z = 1;
  Length k = 0;
  PathModel model = PathModel::Strict;

  SeparatorInstance() = default;
  SeparatorInstance(TemporalGraph g, VertexId s_, VertexId z_, Length k_, PathModel m);
};

/// Outcome of a separation solver. When feasible, `separator` is a sorted
/// set disjoint from {s,z} whose removal destroys all (s,z)-paths of the
/// model. When infeasible, `witness` optionally carries a temporal
/// (s,z)-path that survived the final budget.
struct SeparatorResult {
  bool feasible = false;
  std::vector<VertexId> separator;
  std::optional<TemporalPath> witness;
};

}  // namespace tempsep
