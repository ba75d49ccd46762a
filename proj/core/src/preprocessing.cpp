#include "tempsep/preprocessing.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "tempsep/expansion.hpp"
#include "tempsep/pathfinding.hpp"

namespace tempsep {

TemporalGraph normalize_time_labels(const TemporalGraph& g) {
  std::vector<TimeEdge> edges(g.edges().begin(), g.edges().end());
  TimeLabel next_label = 0;
  TimeLabel previous = 0;
  for (auto& e : edges) {
    if (e.t != previous) {
      previous = e.t;
      ++next_label;
    }
    e.t = next_label;
  }
  return TemporalGraph(g.num_vertices(), std::move(edges), next_label);
}

SeparatorInstance normalize_instance(const SeparatorInstance& inst) {
  return SeparatorInstance(normalize_time_labels(inst.graph), inst.s, inst.z, inst.k,
                           inst.model);
}

namespace {

// Forward reachability from the source node and backward reachability
// from the sink node over the expansion's arcs.
struct ExpansionReach {
  std::vector<char> fwd;
  std::vector<char> bwd;
};

ExpansionReach reach_both(const StrictStaticExpansion& h) {
  ExpansionReach r;
  r.fwd.assign(h.num_nodes(), 0);
  r.bwd.assign(h.num_nodes(), 0);

  std::vector<std::int32_t> queue;
  queue.push_back(h.source_node());
  r.fwd[static_cast<std::size_t>(h.source_node())] = 1;
  const auto arcs = h.arcs();
  const auto& offsets = h.csr_offsets();
  const auto& heads = h.csr_heads();
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::int32_t node = queue[qi];
    for (std::int32_t i = offsets[static_cast<std::size_t>(node)];
         i < offsets[static_cast<std::size_t>(node) + 1]; ++i) {
      const auto& a = arcs[static_cast<std::size_t>(heads[static_cast<std::size_t>(i)])];
      if (!r.fwd[static_cast<std::size_t>(a.to)]) {
        r.fwd[static_cast<std::size_t>(a.to)] = 1;
        queue.push_back(a.to);
      }
    }
  }

  if (h.sink_node() < 0) return r;
  // Reverse adjacency built on the fly.
  std::vector<std::vector<std::int32_t>> rev(h.num_nodes());
  for (const auto& a : h.arcs()) {
    rev[static_cast<std::size_t>(a.to)].push_back(a.from);
  }
  queue.clear();
  queue.push_back(h.sink_node());
  r.bwd[static_cast<std::size_t>(h.sink_node())] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::int32_t node = queue[qi];
    for (std::int32_t prev : rev[static_cast<std::size_t>(node)]) {
      if (!r.bwd[static_cast<std::size_t>(prev)]) {
        r.bwd[static_cast<std::size_t>(prev)] = 1;
        queue.push_back(prev);
      }
    }
  }
  return r;
}

// Keeps exactly the time-edges whose expansion arc lies on some
// (source, sink)-path; n and tau are unchanged.
TemporalGraph project_to_used_edges(const TemporalGraph& g, VertexId s, VertexId z,
                                    bool& z_reachable) {
  auto h = build_expansion(g, s, z);
  auto r = reach_both(h);
  z_reachable = r.fwd[static_cast<std::size_t>(h.sink_node())] != 0;
  if (!z_reachable) {
    return TemporalGraph(g.num_vertices(), {}, g.tau());
  }
  std::vector<std::size_t> keep;
  for (const auto& a : h.arcs()) {
    if (a.kind == ExpansionArcKind::Column) continue;
    if (r.fwd[static_cast<std::size_t>(a.from)] && r.bwd[static_cast<std::size_t>(a.to)]) {
      keep.push_back(static_cast<std::size_t>(a.edge_index));
    }
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return g.subgraph_by_edge_indices(keep);
}

bool underlying_connected_with_terminals(const TemporalGraph& g, VertexId s, VertexId z) {
  auto ug = g.underlying_graph();
  std::vector<char> visited(static_cast<std::size_t>(ug.num_vertices()), 0);
  std::vector<VertexId> queue{s};
  visited[static_cast<std::size_t>(s)] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (VertexId w : ug.neighbors(queue[qi])) {
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  if (!visited[static_cast<std::size_t>(z)]) return false;
  for (VertexId v = 0; v < ug.num_vertices(); ++v) {
    if (ug.degree(v) > 0 && !visited[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

}  // namespace

ReducedCheck check_reduced(const TemporalGraph& g, VertexId s, VertexId z) {
  ReducedCheck result;
  result.connected = underlying_connected_with_terminals(g, s, z);

  bool z_reachable = false;
  auto projected = project_to_used_edges(g, s, z, z_reachable);
  result.every_edge_used =
      z_reachable ? projected.num_edges() == g.num_edges() : g.num_edges() == 0;

  auto d = ssstp(g, s, z);
  result.no_short_path = !d.reachable(z) || d[z] > 2;
  return result;
}

ReduceOutcome reduce_instance(const SeparatorInstance& inst) {
  if (inst.model != PathModel::Strict) {
    throw std::invalid_argument("reduce_instance requires the strict model");
  }
  ReduceOutcome out;
  TemporalGraph g = inst.graph;
  const VertexId s = inst.s;
  const VertexId z = inst.z;

  for (;;) {
    // A direct (s,z) time-edge survives every vertex removal.
    for (const auto& e : g.edges()) {
      if ((e.u == s && e.v == z) || (e.u == z && e.v == s)) {
        out.kind = ReduceOutcome::Kind::DecidedNo;
        out.witness = TemporalPath{{PathStep{s, z, e.t}}};
        out.removed = {};
        return out;
      }
    }
    bool z_reachable = false;
    g = project_to_used_edges(g, s, z, z_reachable);
    if (!z_reachable) {
      out.kind = ReduceOutcome::Kind::DecidedYes;
      out.separator = out.removed;
      return out;
    }
    auto path = shortest_strict_path(g, s, z);
    assert(path.has_value());
    if (path->length() == 1) {
      out.kind = ReduceOutcome::Kind::DecidedNo;
      out.witness = path;
      return out;
    }
    if (path->length() == 2) {
      // The interior vertex belongs to every separator; the k+1-st
      // vertex-disjoint length-two path makes the instance a no.
      if (static_cast<Length>(out.removed.size()) == inst.k) {
        out.kind = ReduceOutcome::Kind::DecidedNo;
        out.witness = path;
        return out;
      }
      const VertexId middle = path->steps[0].to;
      out.removed.push_back(middle);
      g = g.remove_vertices(std::vector<VertexId>{middle});
      continue;
    }
    break;
  }

  out.kind = ReduceOutcome::Kind::Reduced;
  out.instance = SeparatorInstance(std::move(g), s, z,
                                   inst.k - static_cast<Length>(out.removed.size()),
                                   PathModel::Strict);
  return out;
}

SeparatorInstance strict_to_nonstrict(const SeparatorInstance& inst) {
  if (inst.model != PathModel::Strict) {
    throw std::invalid_argument("strict_to_nonstrict requires a strict instance");
  }
  const auto& g = inst.graph;
  const VertexId n = g.num_vertices();
  std::vector<TimeEdge> edges;
  edges.reserve(g.num_edges() * 4);
  // Edge-vertices e_{(v,w),t} and e_{(w,v),t} for the i-th time-edge get
  // ids n + 2i and n + 2i + 1.
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges()[i];
    const VertexId evw = n + static_cast<VertexId>(2 * i);
    const VertexId ewv = evw + 1;
    edges.push_back({e.u, evw, 2 * e.t - 1});
    edges.push_back({evw, e.v, 2 * e.t});
    edges.push_back({e.v, ewv, 2 * e.t - 1});
    edges.push_back({ewv, e.u, 2 * e.t});
  }
  TemporalGraph mapped(n + static_cast<VertexId>(2 * g.num_edges()), std::move(edges),
                       2 * g.tau());
  return SeparatorInstance(std::move(mapped), inst.s, inst.z, inst.k, PathModel::NonStrict);
}

}  // namespace tempsep
