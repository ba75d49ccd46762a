#include "tempsep/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tempsep {

SeparatorInstance gen_from_vertex_cover(const VertexCoverInstance& inst) {
  const VertexId n = inst.graph.num_vertices();
  if (n < 1) throw std::invalid_argument("vertex cover instance needs a vertex");
  // Ids: original v in [0,n), s_v = n + 2v, z_v = n + 2v + 1, s = 3n, z = 3n+1.
  const VertexId s = 3 * n;
  const VertexId z = 3 * n + 1;
  auto s_of = [n](VertexId v) { return n + 2 * v; };
  auto z_of = [n](VertexId v) { return n + 2 * v + 1; };

  std::vector<TimeEdge> edges;
  edges.reserve(6 * static_cast<std::size_t>(n) + 2 * inst.graph.num_edges());
  for (VertexId v = 0; v < n; ++v) {
    edges.push_back({s, s_of(v), 1});
    edges.push_back({s_of(v), v, 1});
    edges.push_back({v, z_of(v), 2});
    edges.push_back({z_of(v), z, 2});
    edges.push_back({s, v, 2});
    edges.push_back({v, z, 1});
  }
  for (const auto& [v, w] : inst.graph.edge_list()) {
    edges.push_back({s_of(v), z_of(w), 1});
    edges.push_back({s_of(w), z_of(v), 1});
  }
  TemporalGraph g(3 * n + 2, std::move(edges), 2);
  return SeparatorInstance(std::move(g), s, z, n + inst.k, PathModel::NonStrict);
}

SeparatorInstance gen_lbs_stack(const StaticGraph& g, VertexId s, VertexId z, Length k,
                                Length l) {
  if (l < 1) throw std::invalid_argument("layer count must be at least one");
  std::vector<TimeEdge> edges;
  edges.reserve(g.num_edges() * static_cast<std::size_t>(l));
  for (const auto& [u, v] : g.edge_list()) {
    for (TimeLabel t = 1; t <= l; ++t) edges.push_back({u, v, t});
  }
  TemporalGraph stacked(g.num_vertices(), std::move(edges), l);
  return SeparatorInstance(std::move(stacked), s, z, k, PathModel::Strict);
}

namespace {

// Connector set membership in formula order; pos is 1-based, indices are
// (row, col) with (1,1) the top-left corner of a (2k+2) x (2k+2) grid.
std::vector<std::pair<Length, Length>> connector_cells(int pos, Length k) {
  const Length g = 2 * k + 2;
  std::vector<std::pair<Length, Length>> cells;
  cells.reserve(static_cast<std::size_t>(k) + 1);
  switch (pos) {
    case 1:
      for (Length c = k + 2; c <= g; ++c) cells.emplace_back(1, c);
      break;
    case 2:
      for (Length r = k / 2; r <= 3 * k / 2; ++r) cells.emplace_back(r, g);
      break;
    case 3:
      for (Length c = k + 2; c <= g; ++c) cells.emplace_back(g, c);
      break;
    case 4:
      for (Length c = 1; c <= k + 1; ++c) cells.emplace_back(g, c);
      break;
    case 5:
      for (Length r = k / 2; r <= 3 * k / 2; ++r) cells.emplace_back(r, 1);
      break;
    case 6:
      for (Length c = 1; c <= k + 1; ++c) cells.emplace_back(1, c);
      break;
    default:
      throw std::logic_error("connector position outside [1,6]");
  }
  return cells;
}

}  // namespace

PlanarLbsOutput gen_planar_lbs(const PlanarLbcInstance& inst) {
  inst.validate();
  const Length k = inst.k;
  const Length l = inst.l;
  const Length side = 2 * k + 2;
  const Length k_prime = side * side - 1;
  const Length path_gadget_len = (l + 1) * k_prime;  // edges per cost-1 traversal

  PlanarLbsOutput out;
  out.k = k;
  out.k_prime = k_prime;
  out.grid_side = static_cast<VertexId>(side);
  out.l_prime = 2 + path_gadget_len + l * (path_gadget_len + 1);

  std::vector<std::pair<VertexId, VertexId>> edges;
  // Grid gadgets first; interiors of edge gadgets follow in input edge
  // order, then the two fresh terminals.
  out.grid_base.resize(static_cast<std::size_t>(inst.n));
  out.connectors.resize(static_cast<std::size_t>(inst.n));
  VertexId next_id = 0;
  auto cell_id = [&](VertexId v, Length row, Length col) {
    return out.grid_base[static_cast<std::size_t>(v)] +
           static_cast<VertexId>((row - 1) * side + (col - 1));
  };
  for (VertexId v = 0; v < inst.n; ++v) {
    out.grid_base[static_cast<std::size_t>(v)] = next_id;
    next_id += static_cast<VertexId>(side * side);
  }
  for (VertexId v = 0; v < inst.n; ++v) {
    for (Length r = 1; r <= side; ++r) {
      for (Length c = 1; c <= side; ++c) {
        if (c < side) edges.emplace_back(cell_id(v, r, c), cell_id(v, r, c + 1));
        if (r < side) edges.emplace_back(cell_id(v, r, c), cell_id(v, r + 1, c));
      }
    }
    for (int pos = 1; pos <= 6; ++pos) {
      auto& set = out.connectors[static_cast<std::size_t>(v)][static_cast<std::size_t>(pos - 1)];
      for (const auto& [r, c] : connector_cells(pos, k)) {
        set.push_back(cell_id(v, r, c));
      }
    }
  }

  // A fresh path of `interior` vertices between two existing endpoints.
  auto add_path = [&](VertexId from, VertexId to, Length interior) {
    VertexId prev = from;
    for (Length i = 0; i < interior; ++i) {
      const VertexId mid = next_id++;
      edges.emplace_back(prev, mid);
      prev = mid;
    }
    edges.emplace_back(prev, to);
  };

  for (const auto& e : inst.edges) {
    const auto& cv =
        out.connectors[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.pos_u - 1)];
    const auto& cw =
        out.connectors[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.pos_v - 1)];
    if (e.cost == 1) {
      // Path of (l+1) k' - 1 vertices, both endpoints fanned into the
      // connector sets.
      const VertexId first = next_id;
      for (Length i = 0; i < path_gadget_len - 1; ++i) {
        const VertexId mid = next_id++;
        if (i > 0) edges.emplace_back(mid - 1, mid);
      }
      const VertexId last = next_id - 1;
      for (VertexId c : cv) edges.emplace_back(c, first);
      for (VertexId c : cw) edges.emplace_back(last, c);
    } else {
      // Planar matching: the p-th connector of one side pairs with the
      // (k-p)-th of the other (index-reversing in formula order), each
      // pair joined by a path of length (l+1) k' + 1.
      for (Length p = 0; p <= k; ++p) {
        add_path(cv[static_cast<std::size_t>(p)], cw[static_cast<std::size_t>(k - p)],
                 path_gadget_len);
      }
    }
  }

  // Fresh terminals on untouched connector sets: smallest position whose
  // set shares no vertex with any used set (connector sets may overlap
  // at k = 2).
  auto pick_free = [&](VertexId v) {
    std::vector<char> used(7, 0);
    for (const auto& e : inst.edges) {
      if (e.u == v) used[static_cast<std::size_t>(e.pos_u)] = 1;
      if (e.v == v) used[static_cast<std::size_t>(e.pos_v)] = 1;
    }
    for (int pos = 1; pos <= 6; ++pos) {
      if (used[static_cast<std::size_t>(pos)]) continue;
      const auto& set =
          out.connectors[static_cast<std::size_t>(v)][static_cast<std::size_t>(pos - 1)];
      bool clean = true;
      for (int other = 1; other <= 6 && clean; ++other) {
        if (!used[static_cast<std::size_t>(other)]) continue;
        const auto& oset =
            out.connectors[static_cast<std::size_t>(v)][static_cast<std::size_t>(other - 1)];
        for (VertexId x : set) {
          if (std::find(oset.begin(), oset.end(), x) != oset.end()) {
            clean = false;
            break;
          }
        }
      }
      if (clean) return pos;
    }
    throw std::logic_error("no untouched connector set available");
  };
  const int s_pos = pick_free(inst.s);
  const int z_pos = pick_free(inst.z);
  out.s = next_id++;
  out.z = next_id++;
  for (VertexId c :
       out.connectors[static_cast<std::size_t>(inst.s)][static_cast<std::size_t>(s_pos - 1)]) {
    edges.emplace_back(out.s, c);
  }
  for (VertexId c :
       out.connectors[static_cast<std::size_t>(inst.z)][static_cast<std::size_t>(z_pos - 1)]) {
    edges.emplace_back(out.z, c);
  }

  out.graph = StaticGraph(next_id, edges);
  return out;
}

TemporalGraph gen_random_temporal(VertexId n, TimeLabel tau,
                                  const RandomTemporalOptions& options) {
  if (options.edge_probability < 0.0 || options.edge_probability > 1.0) {
    throw std::invalid_argument("edge probability outside [0,1]");
  }
  std::mt19937_64 rng(options.seed);
  // Canonical [0,1) doubles so identical seeds give identical graphs on
  // every standard library.
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  VertexId fa = options.forbidden_a;
  VertexId fb = options.forbidden_b;
  if (fa > fb) std::swap(fa, fb);
  std::vector<TimeEdge> edges;
  for (TimeLabel t = 1; t <= tau; ++t) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        const double draw = uniform();
        if (options.forbid_pair && u == fa && v == fb) continue;
        if (draw < options.edge_probability) edges.push_back({u, v, t});
      }
    }
  }
  return TemporalGraph(n, std::move(edges), tau);
}

}  // namespace tempsep
