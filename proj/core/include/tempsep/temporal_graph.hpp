#pragma once

#include <span>
#include <string>
#include <vector>

#include "tempsep/static_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

/// One time-edge ({u,v}, t). The pair is unordered; constructors of
/// TemporalGraph normalize to u < v.
struct TimeEdge {
  VertexId u = 0;
  VertexId v = 0;
  TimeLabel t = 1;

  bool operator==(const TimeEdge&) const = default;
};

/// A temporal graph G = (V, E, tau): n vertices, a duplicate-free
/// time-edge set kept sorted by (t, u, v) with u < v, and the maximal
/// time label tau. Immutable after construction; all "mutations" build
/// a new graph.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  /// Normalizes (orients pairs, sorts, deduplicates) and validates:
  /// endpoints in [0, n), no self-loops, labels in [1, tau].
  TemporalGraph(VertexId n, std::vector<TimeEdge> edges, TimeLabel tau);

  VertexId num_vertices() const { return n_; }
  TimeLabel tau() const { return tau_; }
  std::span<const TimeEdge> edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool has_time_edge(VertexId u, VertexId v, TimeLabel t) const;
  /// True iff some time-edge joins u and v (at any label).
  bool has_pair(VertexId u, VertexId v) const;

  /// Layer t: the static graph of pairs stamped exactly t. Throws if t
  /// is outside [1, tau].
  StaticGraph layer(TimeLabel t) const;

  /// Union of all layers with stamps erased.
  StaticGraph underlying_graph() const;

  /// Vertices incident with an edge present in some but not all layers,
  /// sorted ascending.
  std::vector<VertexId> temporal_core() const;

  /// G - S: drops every time-edge touching S. Removed ids stay as
  /// isolated vertices; n and tau are unchanged.
  TemporalGraph remove_vertices(std::span<const VertexId> removed) const;

  /// Same edges under a new maximal label (used to pad tau upward).
  TemporalGraph with_tau(TimeLabel new_tau) const;

  /// Subgraph keeping exactly the edges at the given indices into edges().
  TemporalGraph subgraph_by_edge_indices(std::span<const std::size_t> keep) const;

  /// Contiguous slice [first, last) of edges() holding label t.
  std::pair<std::size_t, std::size_t> layer_range(TimeLabel t) const;

  bool operator==(const TemporalGraph& other) const = default;

 private:
  VertexId n_ = 0;
  std::vector<TimeEdge> edges_;
  TimeLabel tau_ = 0;
};

/// One traversal step of a temporal path: edge {from,to} used at time t,
/// oriented in walking direction.
struct PathStep {
  VertexId from = 0;
  VertexId to = 0;
  TimeLabel t = 1;

  bool operator==(const PathStep&) const = default;
};

/// A temporal path as a sequence of oriented time-edge traversals.
struct TemporalPath {
  std::vector<PathStep> steps;

  std::size_t length() const { return steps.size(); }
  bool operator==(const TemporalPath&) const = default;

  /// s, interior vertices, z in walking order.
  std::vector<VertexId> vertices() const;
  /// Interior vertices only (everything but the two endpoints).
  std::vector<VertexId> interior() const;
};

/// True iff P is a temporal (s,z)-path of G under the given model:
/// every step is a time-edge of G, endpoints chain from s to z, visited
/// vertices are pairwise distinct, and labels are non-decreasing
/// (non-strict) or strictly increasing (strict). The empty path is valid
/// only when s == z.
bool validate_path(const TemporalGraph& g, const TemporalPath& p, PathModel model,
                   VertexId s, VertexId z);

/// Diagnostic variant: empty string if valid, otherwise a description of
/// the first violated condition.
std::string explain_path_violation(const TemporalGraph& g, const TemporalPath& p,
                                   PathModel model, VertexId s, VertexId z);

}  // namespace tempsep
