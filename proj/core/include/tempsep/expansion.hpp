#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tempsep/temporal_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

enum class ExpansionNodeKind : std::uint8_t { Source, Sink, Grid };

/// Node of the strict static expansion. Grid nodes are (vertex, time)
/// copies u_{t,j}; they exist only for t in phi(v_j) = { t, t+1 : some
/// time-edge at v_j at time t }.
struct ExpansionNode {
  ExpansionNodeKind kind = ExpansionNodeKind::Grid;
  VertexId vertex = -1;  // original vertex for Grid nodes, -1 otherwise
  TimeLabel time = 0;    // 0 for Source, tau+2 for Sink
};

enum class ExpansionArcKind : std::uint8_t { Transit, SourceArc, SinkArc, Column };

/// Arc of the expansion. Column arcs link consecutive time copies of one
/// vertex and weigh 0; all other arcs stem from a time-edge and weigh 1.
/// `edge_index` points into the source graph's edge list (-1 for columns).
struct ExpansionArc {
  std::int32_t from = 0;
  std::int32_t to = 0;
  ExpansionArcKind kind = ExpansionArcKind::Transit;
  std::int32_t weight = 1;
  std::int64_t edge_index = -1;
};

/// Weighted DAG over (time, vertex) nodes whose (source, sink)-paths
/// correspond one-to-one with strict temporal (s,z)-paths of the input.
/// When built without a designated sink, every vertex other than the
/// source gets a grid column and there are no sink arcs; paths then
/// encode strict temporal walks from the source to arbitrary vertices.
class StrictStaticExpansion {
 public:
  std::span<const ExpansionNode> nodes() const { return nodes_; }
  std::span<const ExpansionArc> arcs() const { return arcs_; }
  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }

  std::int32_t source_node() const { return source_; }
  /// -1 when no sink was designated.
  std::int32_t sink_node() const { return sink_; }
  VertexId source_vertex() const { return source_vertex_; }
  std::optional<VertexId> sink_vertex() const { return sink_vertex_; }
  VertexId original_vertex_count() const { return n_; }

  /// Grid node for (vertex, time), or -1 if absent.
  std::int32_t node_of(VertexId vertex, TimeLabel time) const;

  /// Column of a vertex as (time, node) pairs, ascending in time.
  std::span<const std::pair<TimeLabel, std::int32_t>> column(VertexId vertex) const;

  /// Node indices sorted by time (source first, sink last) — a
  /// topological order by construction.
  std::vector<std::int32_t> topological_order() const;

  /// CSR adjacency: arc indices leaving each node.
  const std::vector<std::int32_t>& csr_heads() const { return csr_heads_; }
  const std::vector<std::int32_t>& csr_offsets() const { return csr_offsets_; }

 private:
  friend StrictStaticExpansion build_expansion_impl(const TemporalGraph&, VertexId,
                                                    std::optional<VertexId>);

  VertexId n_ = 0;
  VertexId source_vertex_ = -1;
  std::optional<VertexId> sink_vertex_;
  std::int32_t source_ = 0;
  std::int32_t sink_ = -1;
  std::vector<ExpansionNode> nodes_;
  std::vector<ExpansionArc> arcs_;
  std::vector<std::vector<std::pair<TimeLabel, std::int32_t>>> columns_;
  std::vector<std::int32_t> csr_heads_;    // arc index, grouped by tail
  std::vector<std::int32_t> csr_offsets_;  // per node: [offset, next offset)
};

/// Strict static expansion of (G, s, z): grid columns over V \ {s,z},
/// transit arcs for time-edges between grid vertices, source/sink arcs
/// for time-edges touching s or z, zero-weight column arcs. Built in one
/// pass over the sorted edge list. Time-edges joining s and z directly
/// produce no arcs; callers must flag those before relying on the
/// expansion for separation questions.
StrictStaticExpansion build_expansion(const TemporalGraph& g, VertexId s, VertexId z);

/// Sink-free variant used for single-source distance queries to every
/// vertex.
StrictStaticExpansion build_expansion(const TemporalGraph& g, VertexId s);

}  // namespace tempsep
