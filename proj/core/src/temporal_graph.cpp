#include "tempsep/temporal_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tempsep {

namespace {

bool edge_order(const TimeEdge& a, const TimeEdge& b) {
  if (a.t != b.t) return a.t < b.t;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

}  // namespace

TemporalGraph::TemporalGraph(VertexId n, std::vector<TimeEdge> edges, TimeLabel tau)
    : n_(n), edges_(std::move(edges)), tau_(tau) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (tau < 0) throw std::invalid_argument("negative maximal time label");
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                  " " + std::to_string(e.v));
    }
    if (e.t < 1 || e.t > tau) {
      throw std::invalid_argument("time label " + std::to_string(e.t) +
                                  " outside [1, " + std::to_string(tau) + "]");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), edge_order);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool TemporalGraph::has_time_edge(VertexId u, VertexId v, TimeLabel t) const {
  if (u > v) std::swap(u, v);
  TimeEdge probe{u, v, t};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe, edge_order);
  return it != edges_.end() && *it == probe;
}

bool TemporalGraph::has_pair(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_) {
    if (e.u == u && e.v == v) return true;
  }
  return false;
}

std::pair<std::size_t, std::size_t> TemporalGraph::layer_range(TimeLabel t) const {
  auto lo = std::lower_bound(edges_.begin(), edges_.end(), t,
                             [](const TimeEdge& e, TimeLabel x) { return e.t < x; });
  auto hi = std::upper_bound(edges_.begin(), edges_.end(), t,
                             [](TimeLabel x, const TimeEdge& e) { return x < e.t; });
  return {static_cast<std::size_t>(lo - edges_.begin()),
          static_cast<std::size_t>(hi - edges_.begin())};
}

StaticGraph TemporalGraph::layer(TimeLabel t) const {
  if (t < 1 || t > tau_) {
    throw std::invalid_argument("layer " + std::to_string(t) + " outside [1, " +
                                std::to_string(tau_) + "]");
  }
  auto [lo, hi] = layer_range(t);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) pairs.emplace_back(edges_[i].u, edges_[i].v);
  return StaticGraph(n_, pairs);
}

StaticGraph TemporalGraph::underlying_graph() const {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges_.size());
  for (const auto& e : edges_) pairs.emplace_back(e.u, e.v);
  return StaticGraph(n_, pairs);
}

std::vector<VertexId> TemporalGraph::temporal_core() const {
  // Count distinct labels per pair; a pair is permanent iff it appears in
  // every one of the tau layers.
  std::unordered_map<std::uint64_t, TimeLabel> label_count;
  label_count.reserve(edges_.size());
  for (const auto& e : edges_) {
    std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) |
                        static_cast<std::uint32_t>(e.v);
    ++label_count[key];
  }
  std::vector<char> in_core(static_cast<std::size_t>(n_), 0);
  for (const auto& [key, count] : label_count) {
    if (count < tau_) {
      in_core[key >> 32] = 1;
      in_core[key & 0xffffffffu] = 1;
    }
  }
  std::vector<VertexId> core;
  for (VertexId v = 0; v < n_; ++v) {
    if (in_core[static_cast<std::size_t>(v)]) core.push_back(v);
  }
  return core;
}

TemporalGraph TemporalGraph::remove_vertices(std::span<const VertexId> removed) const {
  std::vector<char> gone(static_cast<std::size_t>(n_), 0);
  for (VertexId v : removed) {
    if (v < 0 || v >= n_) throw std::invalid_argument("removed vertex out of range");
    gone[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<TimeEdge> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (!gone[static_cast<std::size_t>(e.u)] && !gone[static_cast<std::size_t>(e.v)]) {
      kept.push_back(e);
    }
  }
  TemporalGraph result;
  result.n_ = n_;
  result.tau_ = tau_;
  result.edges_ = std::move(kept);  // already normalized
  return result;
}

TemporalGraph TemporalGraph::with_tau(TimeLabel new_tau) const {
  if (!edges_.empty() && new_tau < edges_.back().t) {
    throw std::invalid_argument("new tau below an existing label");
  }
  TemporalGraph result;
  result.n_ = n_;
  result.tau_ = new_tau;
  result.edges_ = edges_;
  return result;
}

TemporalGraph TemporalGraph::subgraph_by_edge_indices(
    std::span<const std::size_t> keep) const {
  std::vector<TimeEdge> kept;
  kept.reserve(keep.size());
  for (std::size_t i : keep) kept.push_back(edges_[i]);
  std::sort(kept.begin(), kept.end(), edge_order);
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  TemporalGraph result;
  result.n_ = n_;
  result.tau_ = tau_;
  result.edges_ = std::move(kept);
  return result;
}

std::vector<VertexId> TemporalPath::vertices() const {
  std::vector<VertexId> vs;
  if (steps.empty()) return vs;
  vs.reserve(steps.size() + 1);
  vs.push_back(steps.front().from);
  for (const auto& st : steps) vs.push_back(st.to);
  return vs;
}

std::vector<VertexId> TemporalPath::interior() const {
  auto vs = vertices();
  if (vs.size() <= 2) return {};
  return std::vector<VertexId>(vs.begin() + 1, vs.end() - 1);
}

std::string explain_path_violation(const TemporalGraph& g, const TemporalPath& p,
                                   PathModel model, VertexId s, VertexId z) {
  if (p.steps.empty()) {
    return s == z ? std::string{} : "empty path with distinct endpoints";
  }
  if (p.steps.front().from != s) return "path does not start at s";
  for (std::size_t i = 0; i + 1 < p.steps.size(); ++i) {
    if (p.steps[i].to != p.steps[i + 1].from) {
      return "steps " + std::to_string(i) + " and " + std::to_string(i + 1) +
             " do not chain";
    }
  }
  if (p.steps.back().to != z) return "path does not end at z";
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const auto& st = p.steps[i];
    if (!g.has_time_edge(st.from, st.to, st.t)) {
      return "step " + std::to_string(i) + " is not a time-edge of the graph";
    }
  }
  for (std::size_t i = 0; i + 1 < p.steps.size(); ++i) {
    TimeLabel a = p.steps[i].t;
    TimeLabel b = p.steps[i + 1].t;
    if (model == PathModel::Strict ? !(a < b) : !(a <= b)) {
      return "labels not monotone at step " + std::to_string(i + 1);
    }
  }
  std::unordered_set<VertexId> seen;
  for (VertexId v : p.vertices()) {
    if (!seen.insert(v).second) {
      return "vertex " + std::to_string(v) + " visited twice";
    }
  }
  return {};
}

bool validate_path(const TemporalGraph& g, const TemporalPath& p, PathModel model,
                   VertexId s, VertexId z) {
  return explain_path_violation(g, p, model, s, z).empty();
}

}  // namespace tempsep
