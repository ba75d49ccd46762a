#include "tempsep/pathfinding.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tempsep {

namespace {

struct NodeSweep {
  std::vector<Length> dist;      // per expansion node
  std::vector<std::int32_t> pred;  // arc index into h.arcs(), -1 at roots
};

// 0/1-weighted shortest paths over the expansion in topological order.
// Strict improvement only, so ties keep the first-discovered predecessor
// (arc order per tail equals sorted-edge order).
NodeSweep sweep(const StrictStaticExpansion& h) {
  NodeSweep out;
  out.dist.assign(h.num_nodes(), kUnreachable);
  out.pred.assign(h.num_nodes(), -1);
  out.dist[static_cast<std::size_t>(h.source_node())] = 0;
  const auto arcs = h.arcs();
  const auto& offsets = h.csr_offsets();
  const auto& heads = h.csr_heads();
  for (std::int32_t node : h.topological_order()) {
    const Length d = out.dist[static_cast<std::size_t>(node)];
    if (d == kUnreachable) continue;
    for (std::int32_t i = offsets[static_cast<std::size_t>(node)];
         i < offsets[static_cast<std::size_t>(node) + 1]; ++i) {
      const auto& a = arcs[static_cast<std::size_t>(heads[static_cast<std::size_t>(i)])];
      const Length nd = d + a.weight;
      if (nd < out.dist[static_cast<std::size_t>(a.to)]) {
        out.dist[static_cast<std::size_t>(a.to)] = nd;
        out.pred[static_cast<std::size_t>(a.to)] = heads[static_cast<std::size_t>(i)];
      }
    }
  }
  return out;
}

DistanceTable project_distances(const StrictStaticExpansion& h, const NodeSweep& ns) {
  DistanceTable table;
  table.dist.assign(static_cast<std::size_t>(h.original_vertex_count()), kUnreachable);
  table.dist[static_cast<std::size_t>(h.source_vertex())] = 0;
  for (VertexId v = 0; v < h.original_vertex_count(); ++v) {
    for (const auto& [time, node] : h.column(v)) {
      table.dist[static_cast<std::size_t>(v)] = std::min(
          table.dist[static_cast<std::size_t>(v)], ns.dist[static_cast<std::size_t>(node)]);
    }
  }
  if (h.sink_node() >= 0) {
    table.dist[static_cast<std::size_t>(*h.sink_vertex())] =
        ns.dist[static_cast<std::size_t>(h.sink_node())];
  }
  return table;
}

}  // namespace

DistanceTable ssstp(const TemporalGraph& g, VertexId s) {
  auto h = build_expansion(g, s);
  return project_distances(h, sweep(h));
}

DistanceTable ssstp(const TemporalGraph& g, VertexId s, VertexId z) {
  auto h = build_expansion(g, s, z);
  return project_distances(h, sweep(h));
}

TemporalGraph reverse_time(const TemporalGraph& g) {
  std::vector<TimeEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.t = g.tau() + 1 - e.t;
  return TemporalGraph(g.num_vertices(), std::move(edges), g.tau());
}

DistanceTable ssstp_to_sink(const TemporalGraph& g, VertexId z) {
  return ssstp(reverse_time(g), z);
}

std::optional<TemporalPath> shortest_strict_path(const TemporalGraph& g, VertexId s,
                                                 VertexId z) {
  auto h = build_expansion(g, s, z);
  auto ns = sweep(h);
  if (ns.dist[static_cast<std::size_t>(h.sink_node())] == kUnreachable) return std::nullopt;
  TemporalPath path;
  const auto arcs = h.arcs();
  const auto nodes = h.nodes();
  std::int32_t node = h.sink_node();
  while (node != h.source_node()) {
    const std::int32_t arc_idx = ns.pred[static_cast<std::size_t>(node)];
    assert(arc_idx >= 0);
    const auto& a = arcs[static_cast<std::size_t>(arc_idx)];
    if (a.kind != ExpansionArcKind::Column) {
      const auto& e = g.edges()[static_cast<std::size_t>(a.edge_index)];
      PathStep step;
      step.t = e.t;
      switch (a.kind) {
        case ExpansionArcKind::SourceArc:
          step.from = s;
          step.to = e.u == s ? e.v : e.u;
          break;
        case ExpansionArcKind::SinkArc:
          step.from = e.u == z ? e.v : e.u;
          step.to = z;
          break;
        default:  // Transit: tail node carries the departing vertex
          step.from = nodes[static_cast<std::size_t>(a.from)].vertex;
          step.to = nodes[static_cast<std::size_t>(a.to)].vertex;
          break;
      }
      path.steps.push_back(step);
    }
    node = a.from;
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

std::vector<TimeLabel> strict_earliest_arrival(const TemporalGraph& g, VertexId s,
                                               std::span<const VertexId> avoid) {
  std::vector<TimeLabel> arrival(static_cast<std::size_t>(g.num_vertices()), kInfiniteTime);
  std::vector<char> blocked(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : avoid) blocked[static_cast<std::size_t>(v)] = 1;
  if (blocked[static_cast<std::size_t>(s)]) {
    throw std::invalid_argument("source is in the avoided set");
  }
  arrival[static_cast<std::size_t>(s)] = 0;
  for (const auto& e : g.edges()) {
    if (blocked[static_cast<std::size_t>(e.u)] || blocked[static_cast<std::size_t>(e.v)]) {
      continue;
    }
    // Labels ascend, so arrivals at earlier labels are final by now;
    // within one label, strictness forbids chaining anyway.
    if (arrival[static_cast<std::size_t>(e.u)] < e.t) {
      arrival[static_cast<std::size_t>(e.v)] =
          std::min(arrival[static_cast<std::size_t>(e.v)], e.t);
    }
    if (arrival[static_cast<std::size_t>(e.v)] < e.t) {
      arrival[static_cast<std::size_t>(e.u)] =
          std::min(arrival[static_cast<std::size_t>(e.u)], e.t);
    }
  }
  return arrival;
}

namespace {

struct LayerSweep {
  std::vector<char> reached;
  // Parent step for every vertex other than s that entered the reached
  // set: the edge and label that absorbed it.
  std::vector<PathStep> parent;
};

LayerSweep nonstrict_sweep(const TemporalGraph& g, VertexId s,
                           std::span<const VertexId> avoid, VertexId stop_at) {
  LayerSweep out;
  out.reached.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  out.parent.assign(static_cast<std::size_t>(g.num_vertices()), PathStep{});
  std::vector<char> blocked(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : avoid) blocked[static_cast<std::size_t>(v)] = 1;
  if (blocked[static_cast<std::size_t>(s)]) {
    throw std::invalid_argument("source is in the avoided set");
  }
  out.reached[static_cast<std::size_t>(s)] = 1;

  const auto edges = g.edges();
  std::vector<std::size_t> adj_start(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<char> touched(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<VertexId> touched_list;
  std::vector<std::pair<VertexId, std::size_t>> half_edges;  // (neighbor, edge idx)
  std::vector<std::size_t> degree(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<VertexId> queue;

  std::size_t pos = 0;
  while (pos < edges.size()) {
    const TimeLabel t = edges[pos].t;
    std::size_t end = pos;
    while (end < edges.size() && edges[end].t == t) ++end;

    // Local adjacency over this layer's touched vertices.
    touched_list.clear();
    for (std::size_t i = pos; i < end; ++i) {
      for (VertexId v : {edges[i].u, edges[i].v}) {
        if (!touched[static_cast<std::size_t>(v)]) {
          touched[static_cast<std::size_t>(v)] = 1;
          touched_list.push_back(v);
          degree[static_cast<std::size_t>(v)] = 0;
        }
      }
    }
    for (std::size_t i = pos; i < end; ++i) {
      ++degree[static_cast<std::size_t>(edges[i].u)];
      ++degree[static_cast<std::size_t>(edges[i].v)];
    }
    std::size_t total = 0;
    for (VertexId v : touched_list) {
      adj_start[static_cast<std::size_t>(v)] = total;
      total += degree[static_cast<std::size_t>(v)];
      degree[static_cast<std::size_t>(v)] = 0;
    }
    half_edges.resize(total);
    for (std::size_t i = pos; i < end; ++i) {
      const VertexId u = edges[i].u;
      const VertexId v = edges[i].v;
      half_edges[adj_start[static_cast<std::size_t>(u)] +
                 degree[static_cast<std::size_t>(u)]++] = {v, i};
      half_edges[adj_start[static_cast<std::size_t>(v)] +
                 degree[static_cast<std::size_t>(v)]++] = {u, i};
    }

    // Multi-source BFS seeded by already-reached touched vertices.
    queue.clear();
    for (VertexId v : touched_list) {
      if (out.reached[static_cast<std::size_t>(v)] && !blocked[static_cast<std::size_t>(v)]) {
        queue.push_back(v);
      }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const VertexId u = queue[qi];
      const std::size_t begin = adj_start[static_cast<std::size_t>(u)];
      const std::size_t count = degree[static_cast<std::size_t>(u)];
      for (std::size_t i = begin; i < begin + count; ++i) {
        const VertexId w = half_edges[i].first;
        if (blocked[static_cast<std::size_t>(w)] || out.reached[static_cast<std::size_t>(w)]) {
          continue;
        }
        out.reached[static_cast<std::size_t>(w)] = 1;
        out.parent[static_cast<std::size_t>(w)] = PathStep{u, w, t};
        if (w == stop_at) return out;
        queue.push_back(w);
      }
    }

    for (VertexId v : touched_list) touched[static_cast<std::size_t>(v)] = 0;
    pos = end;
  }
  return out;
}

}  // namespace

std::vector<char> nonstrict_reachable(const TemporalGraph& g, VertexId s,
                                      std::span<const VertexId> avoid) {
  return nonstrict_sweep(g, s, avoid, -1).reached;
}

std::optional<TemporalPath> nonstrict_path_witness(const TemporalGraph& g, VertexId s,
                                                   VertexId z,
                                                   std::span<const VertexId> avoid) {
  auto sweep_result = nonstrict_sweep(g, s, avoid, z);
  if (!sweep_result.reached[static_cast<std::size_t>(z)]) return std::nullopt;
  TemporalPath path;
  VertexId cur = z;
  while (cur != s) {
    const auto& step = sweep_result.parent[static_cast<std::size_t>(cur)];
    path.steps.push_back(step);
    cur = step.from;
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

std::vector<VertexId> mask_to_vertices(const std::vector<char>& mask) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<Length> ssstp_traversal(const DirectedTemporalGraph& d, VertexId s) {
  if (s < 0 || s >= d.n) throw std::invalid_argument("source out of range");
  for (const auto& a : d.arcs) {
    if (a.traversal < 1) throw std::invalid_argument("traversal time must be positive");
  }

  // Rewire arcs with traversal > 1 through connector vertices: the
  // original arc (v -> x) keeps label t and the full traversal weight,
  // the connector arc (x -> w) lands at label t + traversal - 1 with
  // weight zero. Connector arcs wait in per-label buckets and are
  // flushed when the ascending scan first reaches their label, keeping
  // the rewired arc list label-sorted.
  struct UnitArc {
    VertexId from, to;
    TimeLabel t;
    Length weight;
  };
  TimeLabel horizon = d.tau;
  for (const auto& a : d.arcs) horizon = std::max(horizon, a.t + a.traversal - 1);

  std::vector<std::vector<UnitArc>> buckets(static_cast<std::size_t>(horizon) + 1);
  std::vector<UnitArc> unit_arcs;
  unit_arcs.reserve(d.arcs.size() * 2);
  VertexId next_vertex = d.n;
  TimeLabel flushed_up_to = 0;
  auto flush = [&](TimeLabel up_to) {
    for (TimeLabel t = flushed_up_to + 1; t <= up_to; ++t) {
      for (const auto& a : buckets[static_cast<std::size_t>(t)]) unit_arcs.push_back(a);
      buckets[static_cast<std::size_t>(t)].clear();
    }
    flushed_up_to = std::max(flushed_up_to, up_to);
  };
  for (const auto& a : d.arcs) {
    flush(a.t);
    if (a.traversal == 1) {
      unit_arcs.push_back({a.from, a.to, a.t, 1});
    } else {
      const VertexId connector = next_vertex++;
      unit_arcs.push_back({a.from, connector, a.t, a.traversal});
      buckets[static_cast<std::size_t>(a.t + a.traversal - 1)].push_back(
          {connector, a.to, a.t + a.traversal - 1, 0});
    }
  }
  flush(horizon);

  // Directed expansion over the rewired arcs: one transit arc per unit
  // arc carrying its weight, plus zero-weight column arcs.
  const VertexId total_vertices = next_vertex;
  struct Node {
    VertexId vertex;
    TimeLabel time;
  };
  std::vector<Node> nodes;
  nodes.push_back({-1, 0});  // source
  std::vector<std::vector<std::pair<TimeLabel, std::int32_t>>> columns(
      static_cast<std::size_t>(total_vertices));
  struct Arc {
    std::int32_t from, to;
    Length weight;
  };
  std::vector<Arc> arcs;
  auto ensure = [&](VertexId v, TimeLabel t) {
    auto& col = columns[static_cast<std::size_t>(v)];
    if (col.empty() || t > col.back().first) {
      auto id = static_cast<std::int32_t>(nodes.size());
      nodes.push_back({v, t});
      col.emplace_back(t, id);
    }
  };
  auto grid_node = [&](VertexId v, TimeLabel t) -> std::int32_t {
    const auto& col = columns[static_cast<std::size_t>(v)];
    if (col.back().first == t) return col.back().second;
    return col[col.size() - 2].second;
  };
  for (const auto& a : unit_arcs) {
    const bool from_source = a.from == s;
    if (a.to == s) continue;  // arcs back into the source never shorten anything
    if (!from_source) {
      ensure(a.from, a.t);
      ensure(a.from, a.t + 1);
    }
    ensure(a.to, a.t);
    ensure(a.to, a.t + 1);
    arcs.push_back({from_source ? 0 : grid_node(a.from, a.t), grid_node(a.to, a.t + 1),
                    a.weight});
  }
  for (const auto& col : columns) {
    for (std::size_t i = 0; i + 1 < col.size(); ++i) {
      arcs.push_back({col[i].second, col[i + 1].second, 0});
    }
  }

  // Topological sweep by node time (arcs strictly increase time).
  std::vector<std::int32_t> order(nodes.size());
  {
    TimeLabel max_time = 0;
    for (const auto& nd : nodes) max_time = std::max(max_time, nd.time);
    std::vector<std::int32_t> offsets(static_cast<std::size_t>(max_time) + 2, 0);
    for (const auto& nd : nodes) ++offsets[static_cast<std::size_t>(nd.time) + 1];
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      order[static_cast<std::size_t>(offsets[static_cast<std::size_t>(nodes[i].time)]++)] =
          static_cast<std::int32_t>(i);
    }
  }
  std::vector<std::vector<std::pair<std::int32_t, Length>>> out_arcs(nodes.size());
  for (const auto& a : arcs) {
    out_arcs[static_cast<std::size_t>(a.from)].emplace_back(a.to, a.weight);
  }
  std::vector<Length> node_dist(nodes.size(), kUnreachable);
  node_dist[0] = 0;
  for (std::int32_t node : order) {
    const Length dcur = node_dist[static_cast<std::size_t>(node)];
    if (dcur == kUnreachable) continue;
    for (const auto& [to, w] : out_arcs[static_cast<std::size_t>(node)]) {
      node_dist[static_cast<std::size_t>(to)] =
          std::min(node_dist[static_cast<std::size_t>(to)], dcur + w);
    }
  }
  std::vector<Length> result(static_cast<std::size_t>(d.n), kUnreachable);
  result[static_cast<std::size_t>(s)] = 0;
  for (VertexId v = 0; v < d.n; ++v) {
    for (const auto& [time, node] : columns[static_cast<std::size_t>(v)]) {
      result[static_cast<std::size_t>(v)] =
          std::min(result[static_cast<std::size_t>(v)], node_dist[static_cast<std::size_t>(node)]);
    }
  }
  return result;
}

}  // namespace tempsep
