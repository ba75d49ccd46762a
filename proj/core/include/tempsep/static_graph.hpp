#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tempsep/types.hpp"

namespace tempsep {

/// Simple undirected graph with per-vertex sorted neighbor lists.
/// No self-loops, no parallel edges; adjacency is kept symmetric.
class StaticGraph {
 public:
  StaticGraph() = default;

  explicit StaticGraph(VertexId n) : adj_(static_cast<std::size_t>(n)) {}

  /// Builds from an edge list; u==v and out-of-range endpoints throw,
  /// duplicates (in either orientation) are merged.
  StaticGraph(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  VertexId num_vertices() const { return static_cast<VertexId>(adj_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  std::size_t degree(VertexId v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(VertexId u, VertexId v) const;

  /// Each edge once, as (min, max), sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> edge_list() const;

  /// Copy without the vertices in `removed`; ids are retained, removed
  /// vertices simply become isolated.
  StaticGraph remove_vertices(std::span<const VertexId> removed) const;

  bool operator==(const StaticGraph& other) const = default;

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t num_edges_ = 0;
};

}  // namespace tempsep
