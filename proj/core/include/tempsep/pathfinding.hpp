#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tempsep/expansion.hpp"
#include "tempsep/io.hpp"
#include "tempsep/temporal_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

/// Per-vertex shortest strict temporal path lengths (hop counts) from a
/// source; kUnreachable when no strict path exists. Finite entries never
/// exceed the number of time-edges.
struct DistanceTable {
  std::vector<Length> dist;

  Length operator[](VertexId v) const { return dist[static_cast<std::size_t>(v)]; }
  bool reachable(VertexId v) const { return dist[static_cast<std::size_t>(v)] != kUnreachable; }
  std::size_t size() const { return dist.size(); }
};

/// Single-source shortest strict temporal paths from s, as a 0/1-weighted
/// shortest path sweep over the sink-free expansion in topological order.
DistanceTable ssstp(const TemporalGraph& g, VertexId s);

/// Variant with a designated sink z, matching the expansion over
/// V \ {s,z}: the distance to z uses the sink arcs, and distances to
/// other vertices count only paths that do not pass through z. Direct
/// (s,z) time-edges contribute no arcs, so callers must handle them
/// before relying on the distance to z. Both variants agree on reduced
/// graphs.
DistanceTable ssstp(const TemporalGraph& g, VertexId s, VertexId z);

/// Shortest strict (v,z)-path lengths for every v, by running ssstp from
/// z on the time-reversed graph (labels mapped by t -> tau+1-t).
DistanceTable ssstp_to_sink(const TemporalGraph& g, VertexId z);

/// The graph with every label t replaced by tau+1-t. A strict (v,z)-path
/// here corresponds to a strict (z,v)-path in the original.
TemporalGraph reverse_time(const TemporalGraph& g);

/// One shortest strict temporal (s,z)-path, or nullopt if none exists.
/// Deterministic: among equally short paths, the one discovered first in
/// sorted-edge order is returned.
std::optional<TemporalPath> shortest_strict_path(const TemporalGraph& g, VertexId s,
                                                 VertexId z);

/// Earliest strict arrival times from s in G - avoid, computed by one
/// forward scan over the sorted edge list: arrival(s) = 0 and an edge
/// ({u,v},t) propagates arrival t to v whenever arrival(u) < t. A vertex
/// is strictly reachable iff its entry is finite.
std::vector<TimeLabel> strict_earliest_arrival(const TemporalGraph& g, VertexId s,
                                               std::span<const VertexId> avoid);

/// Non-strict reachability from s in G - avoid: per layer, every
/// connected component touching the reached set is absorbed (multi-hop
/// within one layer allowed). Returns a mask over vertices.
std::vector<char> nonstrict_reachable(const TemporalGraph& g, VertexId s,
                                      std::span<const VertexId> avoid);

/// A non-strict temporal (s,z)-path in G - avoid reconstructed from the
/// layered reachability sweep, or nullopt when z is unreachable.
std::optional<TemporalPath> nonstrict_path_witness(const TemporalGraph& g, VertexId s,
                                                   VertexId z,
                                                   std::span<const VertexId> avoid);

std::vector<VertexId> mask_to_vertices(const std::vector<char>& mask);

/// Minimum total traversal time of a strict path from s to every vertex
/// in a directed temporal graph with positive traversal times. Arcs with
/// traversal > 1 are rewired through connector vertices whose edges are
/// inserted label-sorted via per-label buckets; the expansion sweep then
/// weighs original arcs by their traversal time and connector arcs zero.
std::vector<Length> ssstp_traversal(const DirectedTemporalGraph& d, VertexId s);

}  // namespace tempsep
