#include "tempsep/dpcg.hpp"

#include <stdexcept>
#include <string>

#include "tempsep/preprocessing.hpp"

namespace tempsep {

namespace {

// Arc condition (iii) of the directed path cover graph, evaluated for an
// ordered pair (v, w) already known to share a time-edge.
bool dpcg_arc(VertexId v, VertexId w, VertexId s, VertexId z,
              const DistancePairClass& cls) {
  if (v == z || w == s) return false;
  if (v == s) {
    if (w == z) return false;
    const auto [i, j] = cls.of(w);
    return i == 1 && (j == 2 || j == 3);
  }
  if (w == z) {
    const auto [i, j] = cls.of(v);
    return j == 1 && (i == 2 || i == 3);
  }
  const auto [i, j] = cls.of(v);
  const auto [i2, j2] = cls.of(w);
  if (i < i2) return true;
  return i == 2 && j == 2 && i2 == 2 && j2 == 1;
}

}  // namespace

DirectedPathCoverGraph build_dpcg(const TemporalGraph& g, VertexId s, VertexId z) {
  if (g.tau() != 4) {
    throw std::invalid_argument("directed path cover graph requires tau = 4, got " +
                                std::to_string(g.tau()));
  }
  auto reduced = check_reduced(g, s, z);
  if (!reduced.ok()) {
    throw std::invalid_argument(
        std::string("directed path cover graph requires a reduced input (") +
        (reduced.connected ? "" : "underlying graph disconnected; ") +
        (reduced.every_edge_used ? "" : "some time-edge lies on no strict (s,z)-path; ") +
        (reduced.no_short_path ? "" : "a strict (s,z)-path of length <= 2 exists; ") + ")");
  }

  DirectedPathCoverGraph d;
  d.s = s;
  d.z = z;
  d.classes.from_s = ssstp(g, s, z);
  d.classes.to_z = ssstp_to_sink(g, z);
  d.digraph.n = g.num_vertices();

  std::vector<std::size_t> degree(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const auto& e : g.edges()) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == s || v == z || degree[static_cast<std::size_t>(v)] == 0) continue;
    const auto [i, j] = d.classes.of(v);
    if (i == 1 && j == 1) {
      // Reduced tau=4 graphs never classify a vertex as (1,1); the whole
      // separator correspondence rests on this.
      throw std::logic_error("vertex " + std::to_string(v) +
                             " classified (1,1) on a reduced tau=4 graph");
    }
    const bool known = (i == 1 && (j == 2 || j == 3)) || (i == 2 && (j == 1 || j == 2)) ||
                       (i == 3 && j == 1);
    if (!known) {
      throw std::logic_error("vertex " + std::to_string(v) + " classified (" +
                             (i == kUnreachable ? "inf" : std::to_string(i)) + "," +
                             (j == kUnreachable ? "inf" : std::to_string(j)) +
                             ") outside the reduced tau=4 classes");
    }
  }

  // One pass over the time-edges; both orientations are checked, and
  // repeated pairs at different labels produce the arc only once.
  for (const auto& e : g.edges()) {
    for (auto [v, w] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (dpcg_arc(v, w, s, z, d.classes)) {
        d.digraph.arcs.emplace_back(v, w);
      }
    }
  }
  std::sort(d.digraph.arcs.begin(), d.digraph.arcs.end());
  d.digraph.arcs.erase(std::unique(d.digraph.arcs.begin(), d.digraph.arcs.end()),
                       d.digraph.arcs.end());
  return d;
}

}  // namespace tempsep
