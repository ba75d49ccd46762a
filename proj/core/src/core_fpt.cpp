#include "tempsep/core_fpt.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "tempsep/max_flow.hpp"
#include "tempsep/pathfinding.hpp"

namespace tempsep {

StaticGraph maximal_static_subgraph(const TemporalGraph& g) {
  // A pair is permanent iff its distinct-label count equals tau.
  std::unordered_map<std::uint64_t, TimeLabel> label_count;
  label_count.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    std::uint64_t key =
        (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
    ++label_count[key];
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& [key, count] : label_count) {
    if (count == g.tau()) {
      pairs.emplace_back(static_cast<VertexId>(key >> 32),
                         static_cast<VertexId>(key & 0xffffffffu));
    }
  }
  return StaticGraph(g.num_vertices(), pairs);
}

void enumerate_partition_states(const std::vector<VertexId>& w, VertexId s, VertexId z,
                                Length k,
                                const std::function<bool(const PartitionState&)>& visit) {
  std::vector<VertexId> others;  // W \ {s,z}, sorted
  bool has_s = false, has_z = false;
  for (VertexId v : w) {
    if (v == s) {
      has_s = true;
    } else if (v == z) {
      has_z = true;
    } else {
      others.push_back(v);
    }
  }
  if (!has_s || !has_z) {
    throw std::invalid_argument("both terminals must belong to the core set");
  }
  std::sort(others.begin(), others.end());
  if (others.size() > 30) {
    throw std::invalid_argument("core too large for subset masks");
  }

  // Subset masks sorted by popcount, then numerically.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
    if (std::popcount(mask) <= k) masks.push_back(mask);
  }
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  std::vector<VertexId> remaining;
  std::vector<int> rgs;
  for (std::uint32_t mask : masks) {
    PartitionState state;
    remaining.clear();
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask & (1u << i)) {
        state.s_w.push_back(others[i]);
      } else {
        remaining.push_back(others[i]);
      }
    }
    // Elements partitioned: s, z, then the surviving core members; the
    // restricted-growth string a assigns element i to block a[i] with
    // a[0] = 0 and a[i] <= max(a[0..i-1]) + 1.
    std::vector<VertexId> elements{s, z};
    elements.insert(elements.end(), remaining.begin(), remaining.end());
    rgs.assign(elements.size(), 0);
    bool done = false;
    while (!done) {
      if (elements.size() < 2 || rgs[1] == 1) {  // s and z in different blocks
        PartitionState out = state;
        int max_block = 0;
        for (std::size_t i = 0; i < rgs.size(); ++i) max_block = std::max(max_block, rgs[i]);
        out.blocks.assign(static_cast<std::size_t>(max_block) + 1, {});
        for (std::size_t i = 0; i < elements.size(); ++i) {
          out.blocks[static_cast<std::size_t>(rgs[i])].push_back(elements[i]);
        }
        out.s_block = 0;
        out.z_block = 1;
        if (!visit(out)) return;
      }
      // Next restricted-growth string in lexicographic order.
      done = true;
      for (std::size_t i = rgs.size(); i-- > 1;) {
        int prefix_max = 0;
        for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
        if (rgs[i] <= prefix_max) {
          ++rgs[i];
          for (std::size_t j = i + 1; j < rgs.size(); ++j) rgs[j] = 0;
          done = false;
          break;
        }
      }
    }
  }
}

QuotientGraph build_quotient_graph(const StaticGraph& static_subgraph,
                                   const PartitionState& state,
                                   const std::vector<VertexId>& w) {
  const VertexId n = static_subgraph.num_vertices();
  const auto r = static_cast<VertexId>(state.blocks.size());
  std::vector<std::int32_t> block_of(static_cast<std::size_t>(n), -1);
  std::vector<char> in_w(static_cast<std::size_t>(n), 0);
  for (VertexId v : w) in_w[static_cast<std::size_t>(v)] = 1;
  for (std::size_t b = 0; b < state.blocks.size(); ++b) {
    for (VertexId v : state.blocks[b]) block_of[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(b);
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<char> block_adjacent(state.blocks.size() * state.blocks.size(), 0);
  for (const auto& [u, v] : static_subgraph.edge_list()) {
    const bool wu = in_w[static_cast<std::size_t>(u)];
    const bool wv = in_w[static_cast<std::size_t>(v)];
    if (!wu && !wv) {
      edges.emplace_back(u, v);
      continue;
    }
    const std::int32_t bu = wu ? block_of[static_cast<std::size_t>(u)] : -1;
    const std::int32_t bv = wv ? block_of[static_cast<std::size_t>(v)] : -1;
    if (wu && !wv && bu >= 0) {
      edges.emplace_back(v, n + static_cast<VertexId>(bu));
    } else if (!wu && wv && bv >= 0) {
      edges.emplace_back(u, n + static_cast<VertexId>(bv));
    } else if (wu && wv && bu >= 0 && bv >= 0 && bu != bv) {
      block_adjacent[static_cast<std::size_t>(bu) * state.blocks.size() +
                     static_cast<std::size_t>(bv)] = 1;
    }
    // Edges touching S_W members (block -1) disappear.
  }
  for (VertexId i = 0; i < r; ++i) {
    for (VertexId j = i + 1; j < r; ++j) {
      if (block_adjacent[static_cast<std::size_t>(i) * state.blocks.size() +
                         static_cast<std::size_t>(j)] ||
          block_adjacent[static_cast<std::size_t>(j) * state.blocks.size() +
                         static_cast<std::size_t>(i)]) {
        edges.emplace_back(n + i, n + j);
      }
    }
  }

  QuotientGraph out;
  out.graph = StaticGraph(n + r, edges);
  for (VertexId i = 0; i < r; ++i) out.terminals.push_back(n + i);
  return out;
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<VertexId>& v) const {
    std::size_t h = v.size();
    for (VertexId x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct NwcSearch {
  const StaticGraph& g;
  const std::vector<VertexId>& terminals;
  std::vector<char> is_terminal;
  std::vector<char> removed;
  std::vector<VertexId> chosen;
  // Removed sets proven infeasible at budgets up to the stored value.
  std::unordered_map<std::vector<VertexId>, Length, VectorHash> infeasible_at;

  // Shortest path between any connected terminal pair, as interior
  // vertices; nullopt when all pairs are disconnected; empty interior
  // means two terminals are adjacent (uncuttable).
  std::optional<std::vector<VertexId>> connecting_interior() const {
    std::vector<Length> depth(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<VertexId> parent(static_cast<std::size_t>(g.num_vertices()), -1);
    std::optional<std::vector<VertexId>> best;
    for (VertexId t0 : terminals) {
      std::fill(depth.begin(), depth.end(), -1);
      std::vector<VertexId> queue{t0};
      depth[static_cast<std::size_t>(t0)] = 0;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const VertexId u = queue[qi];
        for (VertexId w : g.neighbors(u)) {
          if (removed[static_cast<std::size_t>(w)] ||
              depth[static_cast<std::size_t>(w)] >= 0) {
            continue;
          }
          if (is_terminal[static_cast<std::size_t>(w)]) {
            // Reconstruct interior of t0 -> ... -> w.
            std::vector<VertexId> interior;
            for (VertexId x = u; x != t0; x = parent[static_cast<std::size_t>(x)]) {
              interior.push_back(x);
            }
            if (!best || interior.size() < best->size()) best = interior;
            if (best->empty()) return best;
            continue;
          }
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        }
      }
    }
    return best;
  }

  bool search(Length budget) {
    auto interior = connecting_interior();
    if (!interior) return true;
    if (interior->empty() || budget == 0) return false;
    auto key = chosen;
    std::sort(key.begin(), key.end());
    if (auto it = infeasible_at.find(key); it != infeasible_at.end() && budget <= it->second) {
      return false;
    }
    for (VertexId v : *interior) {
      removed[static_cast<std::size_t>(v)] = 1;
      chosen.push_back(v);
      if (search(budget - 1)) return true;
      chosen.pop_back();
      removed[static_cast<std::size_t>(v)] = 0;
    }
    auto [it, inserted] = infeasible_at.try_emplace(std::move(key), budget);
    if (!inserted) it->second = std::max(it->second, budget);
    return false;
  }
};

}  // namespace

std::optional<std::vector<VertexId>> solve_nwc(const NWCInstance& inst) {
  if (inst.terminals.size() < 2) return std::vector<VertexId>{};
  NwcSearch search{inst.graph, inst.terminals, {}, {}, {}, {}};
  search.is_terminal.assign(static_cast<std::size_t>(inst.graph.num_vertices()), 0);
  search.removed.assign(static_cast<std::size_t>(inst.graph.num_vertices()), 0);
  for (VertexId t : inst.terminals) search.is_terminal[static_cast<std::size_t>(t)] = 1;

  // Above-lower-bound prune: any solution separates each terminal from
  // the rest, so the largest of those min cuts bounds the budget from
  // below. kUnreachable signals adjacent terminals.
  Length bound = 0;
  for (VertexId x : inst.terminals) {
    std::vector<VertexId> rest;
    for (VertexId t : inst.terminals) {
      if (t != x) rest.push_back(t);
    }
    const Length cut = min_vertex_cut_excluding(inst.graph, x, rest, inst.terminals);
    if (cut == kUnreachable) return std::nullopt;
    bound = std::max(bound, cut);
  }
  if (bound > inst.budget) return std::nullopt;

  for (Length size = bound; size <= inst.budget; ++size) {
    if (search.search(size)) {
      auto solution = search.chosen;
      std::sort(solution.begin(), solution.end());
      return solution;
    }
  }
  return std::nullopt;
}

namespace {

bool verify_nonstrict_separation(const TemporalGraph& g, VertexId s, VertexId z,
                                 std::span<const VertexId> separator) {
  return !nonstrict_reachable(g, s, separator)[static_cast<std::size_t>(z)];
}

}  // namespace

SeparatorResult solve_core_fpt(const SeparatorInstance& inst, const CoreFptOptions& options) {
  if (inst.model != PathModel::NonStrict) {
    throw std::invalid_argument("core FPT solver requires the non-strict model");
  }
  SeparatorResult result;
  if (inst.graph.has_pair(inst.s, inst.z)) {
    result.feasible = false;
    result.witness = nonstrict_path_witness(inst.graph, inst.s, inst.z, {});
    return result;
  }

  auto core = inst.graph.temporal_core();
  std::vector<VertexId> w = core;  // honorary terminals join the core
  for (VertexId t : {inst.s, inst.z}) {
    if (!std::binary_search(core.begin(), core.end(), t)) w.push_back(t);
  }
  std::sort(w.begin(), w.end());
  if (w.size() > options.max_core) {
    throw std::invalid_argument("temporal core of size " + std::to_string(w.size()) +
                                " exceeds the limit " + std::to_string(options.max_core));
  }

  auto static_subgraph = maximal_static_subgraph(inst.graph);

  // Fast path: deleting the whole core interior reduces the problem to a
  // static minimum separator on the maximal static subgraph.
  std::vector<VertexId> core_interior;
  for (VertexId v : w) {
    if (v != inst.s && v != inst.z) core_interior.push_back(v);
  }
  {
    auto without_core = static_subgraph.remove_vertices(core_interior);
    auto cut = min_vertex_separator_static(without_core, inst.s, inst.z,
                                           inst.graph.num_vertices());
    if (cut.status == CutStatus::Found &&
        static_cast<Length>(core_interior.size() + cut.separator.size()) <= inst.k) {
      std::vector<VertexId> separator = core_interior;
      separator.insert(separator.end(), cut.separator.begin(), cut.separator.end());
      std::sort(separator.begin(), separator.end());
      if (verify_nonstrict_separation(inst.graph, inst.s, inst.z, separator)) {
        result.feasible = true;
        result.separator = std::move(separator);
        return result;
      }
    }
  }

  // Evaluates one guessed state; returns the verified separator or none.
  auto evaluate = [&](const PartitionState& state) -> std::optional<std::vector<VertexId>> {
    const auto budget = inst.k - static_cast<Length>(state.s_w.size());
    auto quotient = build_quotient_graph(static_subgraph, state, w);
    auto cut = solve_nwc({quotient.graph, quotient.terminals, budget});
    if (!cut) return std::nullopt;
    std::vector<VertexId> separator = state.s_w;
    separator.insert(separator.end(), cut->begin(), cut->end());
    std::sort(separator.begin(), separator.end());
    if (!verify_nonstrict_separation(inst.graph, inst.s, inst.z, separator)) {
      return std::nullopt;
    }
    return separator;
  };

  std::optional<std::vector<VertexId>> winner;
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    enumerate_partition_states(w, inst.s, inst.z, inst.k, [&](const PartitionState& state) {
      winner = evaluate(state);
      return !winner.has_value();
    });
  } else {
    // Lockstep batches keep the reported separator deterministic: the
    // first success in enumeration order wins regardless of scheduling.
    const std::size_t batch_size = static_cast<std::size_t>(threads) * 4;
    std::vector<PartitionState> batch;
    auto run_batch = [&]() {
      if (batch.empty()) return;
      std::vector<std::optional<std::vector<VertexId>>> results(batch.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= batch.size()) break;
          results[i] = evaluate(batch[i]);
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      for (auto& r : results) {
        if (r) {
          winner = std::move(r);
          break;
        }
      }
      batch.clear();
    };
    enumerate_partition_states(w, inst.s, inst.z, inst.k, [&](const PartitionState& state) {
      batch.push_back(state);
      if (batch.size() >= batch_size) run_batch();
      return !winner.has_value();
    });
    if (!winner) run_batch();
  }

  if (winner) {
    result.feasible = true;
    result.separator = std::move(*winner);
  } else {
    result.feasible = false;
    result.witness = nonstrict_path_witness(inst.graph, inst.s, inst.z, {});
  }
  return result;
}

}  // namespace tempsep
