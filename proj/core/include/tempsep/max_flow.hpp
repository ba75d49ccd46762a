#pragma once

#include <span>
#include <vector>

#include "tempsep/static_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

/// Minimal arc-list digraph used by the static separator routines.
struct Digraph {
  VertexId n = 0;
  std::vector<std::pair<VertexId, VertexId>> arcs;
};

enum class CutStatus {
  Found,          // a minimum separator of size <= budget
  ExceedsBudget,  // minimum separator larger than the budget
  Inseparable,    // an s->z arc makes vertex separation impossible
};

struct StaticSeparatorResult {
  CutStatus status = CutStatus::Found;
  std::vector<VertexId> separator;  // sorted; meaningful only when Found
  Length flow_value = 0;            // augmenting rounds completed
};

/// Minimum static (s,z)-vertex-separator of a digraph via unit vertex
/// capacities on the split network (v_in -> v_out) and at most budget+1
/// augmenting-path rounds; the separator is read off the residual
/// frontier's saturated internal arcs. A direct s->z arc is reported as
/// Inseparable.
StaticSeparatorResult min_vertex_separator_static(const Digraph& d, VertexId s, VertexId z,
                                                  Length budget);

/// Undirected convenience wrapper (each edge becomes two arcs).
StaticSeparatorResult min_vertex_separator_static(const StaticGraph& g, VertexId s,
                                                  VertexId z, Length budget);

/// Maximum number of fully vertex-disjoint paths between two vertex sets
/// (set vertices themselves have unit capacity; a shared vertex counts
/// as a one-vertex path). Used for gadget connectivity checks.
Length set_to_set_disjoint_paths(const StaticGraph& g, std::span<const VertexId> from,
                                 std::span<const VertexId> to);

/// Size of a minimum vertex set outside `protected_vertices` separating x
/// from the targets, or kUnreachable when x touches a target directly.
Length min_vertex_cut_excluding(const StaticGraph& g, VertexId x,
                                std::span<const VertexId> targets,
                                std::span<const VertexId> protected_vertices);

}  // namespace tempsep
