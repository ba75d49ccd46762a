#include "tempsep/max_flow.hpp"

#include <algorithm>
#include <limits>

namespace tempsep {

namespace {

// Flat residual network; reverse edge of index i is i^1.
struct FlowNetwork {
  struct Edge {
    std::int32_t to;
    Length cap;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::int32_t>> out;

  explicit FlowNetwork(std::size_t n) : out(n) {}

  void add(std::int32_t from, std::int32_t to, Length cap) {
    out[static_cast<std::size_t>(from)].push_back(static_cast<std::int32_t>(edges.size()));
    edges.push_back({to, cap});
    out[static_cast<std::size_t>(to)].push_back(static_cast<std::int32_t>(edges.size()));
    edges.push_back({from, 0});
  }

  // One BFS augmentation; returns the bottleneck pushed (0 if no path).
  Length augment(std::int32_t s, std::int32_t t) {
    std::vector<std::int32_t> parent_edge(out.size(), -1);
    parent_edge[static_cast<std::size_t>(s)] = -2;
    std::vector<std::int32_t> queue{s};
    for (std::size_t qi = 0; qi < queue.size() && parent_edge[static_cast<std::size_t>(t)] == -1;
         ++qi) {
      const std::int32_t u = queue[qi];
      for (std::int32_t idx : out[static_cast<std::size_t>(u)]) {
        const auto& e = edges[static_cast<std::size_t>(idx)];
        if (e.cap > 0 && parent_edge[static_cast<std::size_t>(e.to)] == -1) {
          parent_edge[static_cast<std::size_t>(e.to)] = idx;
          queue.push_back(e.to);
        }
      }
    }
    if (parent_edge[static_cast<std::size_t>(t)] == -1) return 0;
    Length bottleneck = std::numeric_limits<Length>::max();
    for (std::int32_t v = t; v != s;) {
      const std::int32_t idx = parent_edge[static_cast<std::size_t>(v)];
      bottleneck = std::min(bottleneck, edges[static_cast<std::size_t>(idx)].cap);
      v = edges[static_cast<std::size_t>(idx ^ 1)].to;
    }
    for (std::int32_t v = t; v != s;) {
      const std::int32_t idx = parent_edge[static_cast<std::size_t>(v)];
      edges[static_cast<std::size_t>(idx)].cap -= bottleneck;
      edges[static_cast<std::size_t>(idx ^ 1)].cap += bottleneck;
      v = edges[static_cast<std::size_t>(idx ^ 1)].to;
    }
    return bottleneck;
  }

  std::vector<char> residual_reachable(std::int32_t s) const {
    std::vector<char> seen(out.size(), 0);
    std::vector<std::int32_t> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (std::int32_t idx : out[static_cast<std::size_t>(queue[qi])]) {
        const auto& e = edges[static_cast<std::size_t>(idx)];
        if (e.cap > 0 && !seen[static_cast<std::size_t>(e.to)]) {
          seen[static_cast<std::size_t>(e.to)] = 1;
          queue.push_back(e.to);
        }
      }
    }
    return seen;
  }
};

constexpr Length kBig = Length{1} << 40;

std::int32_t in_node(VertexId v) { return 2 * v; }
std::int32_t out_node(VertexId v) { return 2 * v + 1; }

}  // namespace

StaticSeparatorResult min_vertex_separator_static(const Digraph& d, VertexId s, VertexId z,
                                                  Length budget) {
  StaticSeparatorResult result;
  for (const auto& [u, v] : d.arcs) {
    if (u == s && v == z) {
      result.status = CutStatus::Inseparable;
      return result;
    }
  }
  FlowNetwork net(static_cast<std::size_t>(2 * d.n));
  for (VertexId v = 0; v < d.n; ++v) {
    net.add(in_node(v), out_node(v), v == s || v == z ? kBig : 1);
  }
  for (const auto& [u, v] : d.arcs) {
    net.add(out_node(u), in_node(v), kBig);
  }
  Length flow = 0;
  while (flow <= budget) {
    const Length pushed = net.augment(out_node(s), in_node(z));
    if (pushed == 0) break;
    flow += pushed;
  }
  result.flow_value = flow;
  if (flow > budget) {
    result.status = CutStatus::ExceedsBudget;
    return result;
  }
  // Internal arcs crossing the residual frontier form the minimum cut.
  auto reach = net.residual_reachable(out_node(s));
  for (VertexId v = 0; v < d.n; ++v) {
    if (v == s || v == z) continue;
    if (reach[static_cast<std::size_t>(in_node(v))] &&
        !reach[static_cast<std::size_t>(out_node(v))]) {
      result.separator.push_back(v);
    }
  }
  result.status = CutStatus::Found;
  return result;
}

StaticSeparatorResult min_vertex_separator_static(const StaticGraph& g, VertexId s,
                                                  VertexId z, Length budget) {
  Digraph d;
  d.n = g.num_vertices();
  for (const auto& [u, v] : g.edge_list()) {
    d.arcs.emplace_back(u, v);
    d.arcs.emplace_back(v, u);
  }
  return min_vertex_separator_static(d, s, z, budget);
}

Length set_to_set_disjoint_paths(const StaticGraph& g, std::span<const VertexId> from,
                                 std::span<const VertexId> to) {
  const VertexId n = g.num_vertices();
  const std::int32_t super_s = 2 * n;
  const std::int32_t super_t = 2 * n + 1;
  FlowNetwork net(static_cast<std::size_t>(2 * n + 2));
  for (VertexId v = 0; v < n; ++v) net.add(in_node(v), out_node(v), 1);
  for (const auto& [u, v] : g.edge_list()) {
    net.add(out_node(u), in_node(v), kBig);
    net.add(out_node(v), in_node(u), kBig);
  }
  for (VertexId v : from) net.add(super_s, in_node(v), 1);
  for (VertexId v : to) net.add(out_node(v), super_t, 1);
  Length flow = 0;
  for (;;) {
    const Length pushed = net.augment(super_s, super_t);
    if (pushed == 0) break;
    flow += pushed;
  }
  return flow;
}

Length min_vertex_cut_excluding(const StaticGraph& g, VertexId x,
                                std::span<const VertexId> targets,
                                std::span<const VertexId> protected_vertices) {
  const VertexId n = g.num_vertices();
  const std::int32_t super_t = 2 * n;
  std::vector<char> is_protected(static_cast<std::size_t>(n), 0);
  for (VertexId v : protected_vertices) is_protected[static_cast<std::size_t>(v)] = 1;
  is_protected[static_cast<std::size_t>(x)] = 1;
  for (VertexId v : targets) is_protected[static_cast<std::size_t>(v)] = 1;
  FlowNetwork net(static_cast<std::size_t>(2 * n + 1));
  for (VertexId v = 0; v < n; ++v) {
    net.add(in_node(v), out_node(v), is_protected[static_cast<std::size_t>(v)] ? kBig : 1);
  }
  for (const auto& [u, v] : g.edge_list()) {
    net.add(out_node(u), in_node(v), kBig);
    net.add(out_node(v), in_node(u), kBig);
  }
  for (VertexId v : targets) net.add(out_node(v), super_t, kBig);
  Length flow = 0;
  while (flow < kBig) {
    const Length pushed = net.augment(out_node(x), super_t);
    if (pushed == 0) break;
    flow += pushed;
  }
  return flow >= kBig ? kUnreachable : flow;
}

}  // namespace tempsep
