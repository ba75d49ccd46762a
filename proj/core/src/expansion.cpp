#include "tempsep/expansion.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tempsep {

std::int32_t StrictStaticExpansion::node_of(VertexId vertex, TimeLabel time) const {
  const auto& col = columns_[static_cast<std::size_t>(vertex)];
  auto it = std::lower_bound(col.begin(), col.end(), time,
                             [](const auto& entry, TimeLabel t) { return entry.first < t; });
  if (it == col.end() || it->first != time) return -1;
  return it->second;
}

std::span<const std::pair<TimeLabel, std::int32_t>> StrictStaticExpansion::column(
    VertexId vertex) const {
  return columns_[static_cast<std::size_t>(vertex)];
}

std::vector<std::int32_t> StrictStaticExpansion::topological_order() const {
  // Counting sort by node time; source (time 0) lands first, the sink
  // (time tau+2, larger than any grid time) last. No arc connects two
  // nodes of equal time, so any order within a bucket works.
  TimeLabel max_time = 0;
  for (const auto& nd : nodes_) max_time = std::max(max_time, nd.time);
  std::vector<std::int32_t> bucket_sizes(static_cast<std::size_t>(max_time) + 2, 0);
  for (const auto& nd : nodes_) ++bucket_sizes[static_cast<std::size_t>(nd.time)];
  std::vector<std::int32_t> offsets(bucket_sizes.size() + 1, 0);
  for (std::size_t i = 0; i < bucket_sizes.size(); ++i) {
    offsets[i + 1] = offsets[i] + bucket_sizes[i];
  }
  std::vector<std::int32_t> order(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    order[static_cast<std::size_t>(offsets[static_cast<std::size_t>(nodes_[i].time)]++)] =
        static_cast<std::int32_t>(i);
  }
  return order;
}

StrictStaticExpansion build_expansion_impl(const TemporalGraph& g, VertexId s,
                                           std::optional<VertexId> z) {
  if (s < 0 || s >= g.num_vertices()) throw std::invalid_argument("source out of range");
  if (z && (*z < 0 || *z >= g.num_vertices())) {
    throw std::invalid_argument("sink out of range");
  }
  if (z && *z == s) throw std::invalid_argument("source and sink must be distinct");

  StrictStaticExpansion h;
  h.n_ = g.num_vertices();
  h.source_vertex_ = s;
  h.sink_vertex_ = z;
  h.columns_.resize(static_cast<std::size_t>(g.num_vertices()));

  h.nodes_.push_back({ExpansionNodeKind::Source, -1, 0});
  h.source_ = 0;
  if (z) {
    h.nodes_.push_back({ExpansionNodeKind::Sink, -1, g.tau() + 2});
    h.sink_ = 1;
  }

  auto is_terminal = [&](VertexId v) { return v == s || (z && v == *z); };

  // Ensures u_{t,v} exists; edges arrive by ascending label, so a missing
  // time is always larger than everything already in the column.
  auto ensure = [&](VertexId v, TimeLabel t) {
    auto& col = h.columns_[static_cast<std::size_t>(v)];
    if (col.empty() || t > col.back().first) {
      auto id = static_cast<std::int32_t>(h.nodes_.size());
      h.nodes_.push_back({ExpansionNodeKind::Grid, v, t});
      col.emplace_back(t, id);
    }
  };
  // Only valid for times ensured while processing the current edge: the
  // node sits in the last two column entries.
  auto grid_node = [&](VertexId v, TimeLabel t) -> std::int32_t {
    const auto& col = h.columns_[static_cast<std::size_t>(v)];
    assert(!col.empty());
    if (col.back().first == t) return col.back().second;
    assert(col.size() >= 2 && col[col.size() - 2].first == t);
    return col[col.size() - 2].second;
  };

  const auto edges = g.edges();
  h.arcs_.reserve(edges.size() * 2);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const VertexId u = edges[e].u;
    const VertexId v = edges[e].v;
    const TimeLabel t = edges[e].t;
    const bool u_term = is_terminal(u);
    const bool v_term = is_terminal(v);
    if (u_term && v_term) continue;  // {s,z} time-edge: no arcs by definition
    if (!u_term) {
      ensure(u, t);
      ensure(u, t + 1);
    }
    if (!v_term) {
      ensure(v, t);
      ensure(v, t + 1);
    }
    if (!u_term && !v_term) {
      h.arcs_.push_back({grid_node(u, t), grid_node(v, t + 1), ExpansionArcKind::Transit, 1,
                         static_cast<std::int64_t>(e)});
      h.arcs_.push_back({grid_node(v, t), grid_node(u, t + 1), ExpansionArcKind::Transit, 1,
                         static_cast<std::int64_t>(e)});
    } else {
      const VertexId term = u_term ? u : v;
      const VertexId other = u_term ? v : u;
      if (term == s) {
        h.arcs_.push_back({h.source_, grid_node(other, t + 1), ExpansionArcKind::SourceArc,
                           1, static_cast<std::int64_t>(e)});
      } else {
        h.arcs_.push_back({grid_node(other, t), h.sink_, ExpansionArcKind::SinkArc, 1,
                           static_cast<std::int64_t>(e)});
      }
    }
  }

  for (const auto& col : h.columns_) {
    for (std::size_t i = 0; i + 1 < col.size(); ++i) {
      h.arcs_.push_back({col[i].second, col[i + 1].second, ExpansionArcKind::Column, 0, -1});
    }
  }

  // CSR over arc tails (counting sort keeps arc insertion order per tail).
  h.csr_offsets_.assign(h.nodes_.size() + 1, 0);
  for (const auto& a : h.arcs_) ++h.csr_offsets_[static_cast<std::size_t>(a.from) + 1];
  for (std::size_t i = 1; i < h.csr_offsets_.size(); ++i) {
    h.csr_offsets_[i] += h.csr_offsets_[i - 1];
  }
  h.csr_heads_.resize(h.arcs_.size());
  {
    std::vector<std::int32_t> cursor(h.csr_offsets_.begin(), h.csr_offsets_.end() - 1);
    for (std::size_t i = 0; i < h.arcs_.size(); ++i) {
      h.csr_heads_[static_cast<std::size_t>(
          cursor[static_cast<std::size_t>(h.arcs_[i].from)]++)] =
          static_cast<std::int32_t>(i);
    }
  }
  return h;
}

StrictStaticExpansion build_expansion(const TemporalGraph& g, VertexId s, VertexId z) {
  return build_expansion_impl(g, s, z);
}

StrictStaticExpansion build_expansion(const TemporalGraph& g, VertexId s) {
  return build_expansion_impl(g, s, std::nullopt);
}

}  // namespace tempsep
