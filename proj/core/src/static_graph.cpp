#include "tempsep/static_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tempsep {

StaticGraph::StaticGraph(VertexId n,
                         const std::vector<std::pair<VertexId, VertexId>>& edges)
    : adj_(static_cast<std::size_t>(n)) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("static graph edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) {
      throw std::invalid_argument("static graph self-loop at vertex " + std::to_string(u));
    }
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    num_edges_ += nbrs.size();
  }
  num_edges_ /= 2;
}

bool StaticGraph::has_edge(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> StaticGraph::edge_list() const {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(num_edges_);
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

StaticGraph StaticGraph::remove_vertices(std::span<const VertexId> removed) const {
  std::vector<char> gone(static_cast<std::size_t>(num_vertices()), 0);
  for (VertexId v : removed) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (const auto& [u, v] : edge_list()) {
    if (!gone[static_cast<std::size_t>(u)] && !gone[static_cast<std::size_t>(v)]) {
      kept.emplace_back(u, v);
    }
  }
  return StaticGraph(num_vertices(), kept);
}

}  // namespace tempsep
