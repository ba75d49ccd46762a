#include "oracles.hpp"

#include <algorithm>
#include <random>

namespace tempsep::oracle {

namespace {

// DFS over label-monotone simple paths from s; calls visit(v, length,
// last_label) at every partial path endpoint.
template <typename Visit>
void walk_paths(const TemporalGraph& g, VertexId s, bool strict,
                std::optional<VertexId> forbidden_interior, Visit&& visit) {
  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
  on_path[static_cast<std::size_t>(s)] = 1;
  std::vector<PathStep> steps;

  auto rec = [&](auto&& self, VertexId at, TimeLabel last) -> void {
    visit(at, steps, last);
    if (forbidden_interior && at == *forbidden_interior && at != s) return;
    for (const auto& e : g.edges()) {
      if (strict ? e.t <= last : e.t < last) continue;
      VertexId next;
      if (e.u == at) {
        next = e.v;
      } else if (e.v == at) {
        next = e.u;
      } else {
        continue;
      }
      if (on_path[static_cast<std::size_t>(next)]) continue;
      on_path[static_cast<std::size_t>(next)] = 1;
      steps.push_back({at, next, e.t});
      self(self, next, e.t);
      steps.pop_back();
      on_path[static_cast<std::size_t>(next)] = 0;
    }
  };
  rec(rec, s, 0);
}

}  // namespace

std::vector<Length> strict_distances(const TemporalGraph& g, VertexId s,
                                     std::optional<VertexId> forbidden_interior) {
  std::vector<Length> dist(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
  walk_paths(g, s, true, forbidden_interior,
             [&](VertexId at, const std::vector<PathStep>& steps, TimeLabel) {
               dist[static_cast<std::size_t>(at)] =
                   std::min(dist[static_cast<std::size_t>(at)],
                            static_cast<Length>(steps.size()));
             });
  return dist;
}

std::vector<TemporalPath> all_strict_paths(const TemporalGraph& g, VertexId s, VertexId z) {
  std::vector<TemporalPath> paths;
  walk_paths(g, s, true, z, [&](VertexId at, const std::vector<PathStep>& steps, TimeLabel) {
    if (at == z && !steps.empty()) paths.push_back(TemporalPath{steps});
  });
  return paths;
}

std::vector<TemporalPath> chordless_strict_paths(const TemporalGraph& g, VertexId s,
                                                 VertexId z) {
  std::vector<TemporalPath> result;
  for (const auto& path : all_strict_paths(g, s, z)) {
    auto vertices = path.vertices();
    std::vector<VertexId> outside;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) {
        outside.push_back(v);
      }
    }
    auto induced = g.remove_vertices(outside);
    bool has_chord = false;
    for (const auto& other : all_strict_paths(induced, s, z)) {
      if (other.length() + 1 == path.length()) {
        has_chord = true;
        break;
      }
    }
    if (!has_chord) result.push_back(path);
  }
  return result;
}

std::vector<char> nonstrict_reachable(const TemporalGraph& g, VertexId s,
                                      const std::vector<VertexId>& avoid) {
  auto pruned = g.remove_vertices(avoid);
  std::vector<char> reached(static_cast<std::size_t>(g.num_vertices()), 0);
  walk_paths(pruned, s, false, std::nullopt,
             [&](VertexId at, const std::vector<PathStep>&, TimeLabel) {
               reached[static_cast<std::size_t>(at)] = 1;
             });
  return reached;
}

std::vector<char> strict_reachable(const TemporalGraph& g, VertexId s,
                                   const std::vector<VertexId>& avoid) {
  auto pruned = g.remove_vertices(avoid);
  std::vector<char> reached(static_cast<std::size_t>(g.num_vertices()), 0);
  walk_paths(pruned, s, true, std::nullopt,
             [&](VertexId at, const std::vector<PathStep>&, TimeLabel) {
               reached[static_cast<std::size_t>(at)] = 1;
             });
  return reached;
}

bool edge_on_strict_walk(const TemporalGraph& g, VertexId s, VertexId z,
                         const TimeEdge& edge) {
  // Reachability before t: restrict to labels < t and ask for a strict
  // path; after t: labels > t on the time-reversed question.
  auto reaches_before = [&](VertexId target, TimeLabel t) {
    if (target == s) return true;
    std::vector<TimeEdge> filtered;
    for (const auto& e : g.edges()) {
      if (e.t < t) filtered.push_back(e);
    }
    TemporalGraph sub(g.num_vertices(), filtered, g.tau());
    return strict_reachable(sub, s, {})[static_cast<std::size_t>(target)] != 0;
  };
  auto reaches_z_after = [&](VertexId from, TimeLabel t) {
    if (from == z) return true;
    std::vector<TimeEdge> filtered;
    for (const auto& e : g.edges()) {
      if (e.t > t) filtered.push_back(e);
    }
    TemporalGraph sub(g.num_vertices(), filtered, g.tau());
    return strict_reachable(sub, from, {})[static_cast<std::size_t>(z)] != 0;
  };
  return (reaches_before(edge.u, edge.t) && reaches_z_after(edge.v, edge.t)) ||
         (reaches_before(edge.v, edge.t) && reaches_z_after(edge.u, edge.t));
}

namespace {

template <typename Check>
std::optional<std::vector<VertexId>> min_subset(const std::vector<VertexId>& candidates,
                                                Check&& separated) {
  for (std::size_t m = 0; m <= candidates.size(); ++m) {
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
      std::vector<VertexId> subset(m);
      for (std::size_t i = 0; i < m; ++i) subset[i] = candidates[idx[i]];
      if (separated(subset)) return subset;
      std::size_t i = m;
      bool advanced = false;
      while (i-- > 0) {
        if (idx[i] != i + candidates.size() - m) {
          ++idx[i];
          for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<VertexId>> min_separator(const TemporalGraph& g, VertexId s,
                                                   VertexId z, PathModel model) {
  if (g.has_pair(s, z)) return std::nullopt;
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v != s && v != z) candidates.push_back(v);
  }
  return min_subset(candidates, [&](const std::vector<VertexId>& subset) {
    auto reached = model == PathModel::Strict ? strict_reachable(g, s, subset)
                                              : nonstrict_reachable(g, s, subset);
    return !reached[static_cast<std::size_t>(z)];
  });
}

std::optional<std::vector<VertexId>> digraph_min_separator(const Digraph& d, VertexId s,
                                                           VertexId z) {
  for (const auto& [u, v] : d.arcs) {
    if (u == s && v == z) return std::nullopt;
  }
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < d.n; ++v) {
    if (v != s && v != z) candidates.push_back(v);
  }
  return min_subset(candidates, [&](const std::vector<VertexId>& subset) {
    std::vector<char> removed(static_cast<std::size_t>(d.n), 0);
    for (VertexId v : subset) removed[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(d.n), 0);
    std::vector<VertexId> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (const auto& [a, b] : d.arcs) {
        if (a != queue[qi] || removed[static_cast<std::size_t>(b)] ||
            seen[static_cast<std::size_t>(b)]) {
          continue;
        }
        seen[static_cast<std::size_t>(b)] = 1;
        queue.push_back(b);
      }
    }
    return !seen[static_cast<std::size_t>(z)];
  });
}

Length min_vertex_cover(const StaticGraph& g) {
  const auto edges = g.edge_list();
  const VertexId n = g.num_vertices();
  Length best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool covers = true;
    for (const auto& [u, v] : edges) {
      if (!(mask & (1u << u)) && !(mask & (1u << v))) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::min<Length>(best, std::popcount(mask));
  }
  return best;
}

std::optional<Length> min_nwc(const StaticGraph& g, const std::vector<VertexId>& terminals) {
  std::vector<char> is_terminal(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId t : terminals) is_terminal[static_cast<std::size_t>(t)] = 1;
  for (VertexId t : terminals) {
    for (VertexId w : g.neighbors(t)) {
      if (is_terminal[static_cast<std::size_t>(w)]) return std::nullopt;
    }
  }
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!is_terminal[static_cast<std::size_t>(v)]) candidates.push_back(v);
  }
  auto result = min_subset(candidates, [&](const std::vector<VertexId>& subset) {
    auto pruned = g.remove_vertices(subset);
    // All terminal pairs disconnected?
    std::vector<std::int32_t> comp(static_cast<std::size_t>(g.num_vertices()), -1);
    std::int32_t next = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (comp[static_cast<std::size_t>(v)] >= 0) continue;
      if (std::find(subset.begin(), subset.end(), v) != subset.end()) continue;
      std::vector<VertexId> queue{v};
      comp[static_cast<std::size_t>(v)] = next;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (VertexId w : pruned.neighbors(queue[qi])) {
          if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = next;
            queue.push_back(w);
          }
        }
      }
      ++next;
    }
    for (std::size_t i = 0; i < terminals.size(); ++i) {
      for (std::size_t j = i + 1; j < terminals.size(); ++j) {
        if (comp[static_cast<std::size_t>(terminals[i])] ==
            comp[static_cast<std::size_t>(terminals[j])]) {
          return false;
        }
      }
    }
    return true;
  });
  if (!result) return std::nullopt;
  return static_cast<Length>(result->size());
}

namespace {

bool short_path_exists_oracle(const StaticGraph& g, VertexId s, VertexId z, Length l,
                              const std::vector<char>& removed) {
  // DFS over simple paths of bounded length.
  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
  on_path[static_cast<std::size_t>(s)] = 1;
  auto rec = [&](auto&& self, VertexId at, Length depth) -> bool {
    if (at == z) return true;
    if (depth == l) return false;
    for (VertexId w : g.neighbors(at)) {
      if (on_path[static_cast<std::size_t>(w)] || removed[static_cast<std::size_t>(w)]) {
        continue;
      }
      on_path[static_cast<std::size_t>(w)] = 1;
      if (self(self, w, depth + 1)) return true;
      on_path[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };
  return rec(rec, s, 0);
}

}  // namespace

std::optional<Length> min_lbs(const StaticGraph& g, VertexId s, VertexId z, Length l) {
  if (g.has_edge(s, z)) return std::nullopt;
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v != s && v != z) candidates.push_back(v);
  }
  auto result = min_subset(candidates, [&](const std::vector<VertexId>& subset) {
    std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()), 0);
    for (VertexId v : subset) removed[static_cast<std::size_t>(v)] = 1;
    return !short_path_exists_oracle(g, s, z, l, removed);
  });
  if (!result) return std::nullopt;
  return static_cast<Length>(result->size());
}

bool lbs_edge_cut_decision(const PlanarLbcInstance& inst) {
  // Only cost-1 edges can appear in a budget-k cut.
  std::vector<std::size_t> cheap;
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    if (inst.edges[i].cost == 1) cheap.push_back(i);
  }
  const auto limit = static_cast<std::size_t>(inst.k);
  std::vector<char> deleted(inst.edges.size(), 0);

  auto no_short_path = [&]() {
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
      if (!deleted[i]) kept.emplace_back(inst.edges[i].u, inst.edges[i].v);
    }
    StaticGraph g(inst.n, kept);
    std::vector<char> removed(static_cast<std::size_t>(inst.n), 0);
    return !short_path_exists_oracle(g, inst.s, inst.z, inst.l, removed);
  };

  auto rec = [&](auto&& self, std::size_t from, std::size_t used) -> bool {
    if (no_short_path()) return true;
    if (used == limit) return false;
    for (std::size_t i = from; i < cheap.size(); ++i) {
      deleted[cheap[i]] = 1;
      if (self(self, i + 1, used + 1)) return true;
      deleted[cheap[i]] = 0;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

std::vector<Length> traversal_times(const DirectedTemporalGraph& d, VertexId s) {
  std::vector<Length> best(static_cast<std::size_t>(d.n), kUnreachable);
  best[static_cast<std::size_t>(s)] = 0;
  std::vector<char> on_path(static_cast<std::size_t>(d.n), 0);
  on_path[static_cast<std::size_t>(s)] = 1;
  // Extend with arcs departing no earlier than the previous arrival.
  auto rec = [&](auto&& self, VertexId at, TimeLabel min_depart, Length total) -> void {
    for (const auto& a : d.arcs) {
      if (a.from != at || a.t < min_depart || on_path[static_cast<std::size_t>(a.to)]) {
        continue;
      }
      const Length next_total = total + a.traversal;
      best[static_cast<std::size_t>(a.to)] =
          std::min(best[static_cast<std::size_t>(a.to)], next_total);
      on_path[static_cast<std::size_t>(a.to)] = 1;
      self(self, a.to, a.t + a.traversal, next_total);
      on_path[static_cast<std::size_t>(a.to)] = 0;
    }
  };
  rec(rec, s, 1, 0);
  return best;
}

bool is_acyclic(std::size_t num_nodes,
                const std::vector<std::pair<std::int32_t, std::int32_t>>& arcs) {
  std::vector<std::size_t> indegree(num_nodes, 0);
  std::vector<std::vector<std::int32_t>> out(num_nodes);
  for (const auto& [a, b] : arcs) {
    ++indegree[static_cast<std::size_t>(b)];
    out[static_cast<std::size_t>(a)].push_back(b);
  }
  std::vector<std::int32_t> queue;
  for (std::size_t v = 0; v < num_nodes; ++v) {
    if (indegree[v] == 0) queue.push_back(static_cast<std::int32_t>(v));
  }
  std::size_t processed = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    ++processed;
    for (std::int32_t w : out[static_cast<std::size_t>(queue[qi])]) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
  }
  return processed == num_nodes;
}

bool is_connected(const StaticGraph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<VertexId> queue{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (VertexId w : g.neighbors(queue[qi])) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

StaticGraph random_static_graph(VertexId n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (uniform() < p) edges.emplace_back(u, v);
    }
  }
  return StaticGraph(n, edges);
}

}  // namespace tempsep::oracle
