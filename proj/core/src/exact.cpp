#include "tempsep/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "tempsep/pathfinding.hpp"

namespace tempsep {

namespace {

bool has_direct_edge(const TemporalGraph& g, VertexId s, VertexId z) {
  return g.has_pair(s, z);
}

bool separates(const TemporalGraph& g, VertexId s, VertexId z, PathModel model,
               std::span<const VertexId> avoid) {
  if (model == PathModel::Strict) {
    return strict_earliest_arrival(g, s, avoid)[static_cast<std::size_t>(z)] ==
           kInfiniteTime;
  }
  return !nonstrict_reachable(g, s, avoid)[static_cast<std::size_t>(z)];
}

// Calls fn on every size-m subset of candidates in lexicographic order
// until fn returns true; reports whether fn ever did.
template <typename Fn>
bool for_each_combination(const std::vector<VertexId>& candidates, std::size_t m, Fn&& fn) {
  if (m > candidates.size()) return false;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::vector<VertexId> subset(m);
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) subset[i] = candidates[idx[i]];
    if (fn(subset)) return true;
    // Advance to the next combination.
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (idx[i] != i + candidates.size() - m) {
        ++idx[i];
        for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
    if (m == 0) return false;
  }
}

}  // namespace

std::optional<std::vector<VertexId>> brute_force_min_separator(const TemporalGraph& g,
                                                               VertexId s, VertexId z,
                                                               PathModel model) {
  if (g.num_vertices() > kBruteForceMaxVertices) {
    throw std::invalid_argument("graph too large for subset enumeration");
  }
  if (has_direct_edge(g, s, z)) return std::nullopt;
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v != s && v != z) candidates.push_back(v);
  }
  std::vector<VertexId> best;
  for (std::size_t m = 0; m <= candidates.size(); ++m) {
    const bool found =
        for_each_combination(candidates, m, [&](const std::vector<VertexId>& subset) {
          if (separates(g, s, z, model, subset)) {
            best = subset;
            return true;
          }
          return false;
        });
    if (found) return best;
  }
  // Removing every candidate leaves only s and z; with no direct edge
  // that always separates, so this point is unreachable.
  throw std::logic_error("subset enumeration exhausted without a separator");
}

SeparatorResult brute_force_decide(const SeparatorInstance& inst) {
  SeparatorResult result;
  auto minimum = brute_force_min_separator(inst.graph, inst.s, inst.z, inst.model);
  if (minimum && static_cast<Length>(minimum->size()) <= inst.k) {
    result.feasible = true;
    result.separator = std::move(*minimum);
  } else {
    result.feasible = false;
  }
  return result;
}

namespace {

std::optional<TemporalPath> extract_path(const TemporalGraph& g, VertexId s, VertexId z,
                                         PathModel model) {
  if (model == PathModel::Strict) return shortest_strict_path(g, s, z);
  return nonstrict_path_witness(g, s, z, {});
}

struct BranchState {
  const SeparatorInstance& inst;
  std::vector<VertexId> chosen;
};

bool branch(BranchState& st, const TemporalGraph& g, Length budget,
            std::optional<TemporalPath>& witness) {
  auto path = extract_path(g, st.inst.s, st.inst.z, st.inst.model);
  if (!path) return true;
  if (budget == 0 || path->length() == 1) {
    witness = path;
    return false;
  }
  for (VertexId v : path->interior()) {
    st.chosen.push_back(v);
    auto next = g.remove_vertices(std::vector<VertexId>{v});
    if (branch(st, next, budget - 1, witness)) return true;
    st.chosen.pop_back();
  }
  if (!witness) witness = path;
  return false;
}

SeparatorResult branch_solve(const SeparatorInstance& inst) {
  SeparatorResult result;
  if (has_direct_edge(inst.graph, inst.s, inst.z)) {
    result.feasible = false;
    for (const auto& e : inst.graph.edges()) {
      if ((e.u == inst.s && e.v == inst.z) || (e.u == inst.z && e.v == inst.s)) {
        result.witness = TemporalPath{{PathStep{inst.s, inst.z, e.t}}};
        break;
      }
    }
    return result;
  }
  BranchState st{inst, {}};
  std::optional<TemporalPath> witness;
  if (branch(st, inst.graph, inst.k, witness)) {
    result.feasible = true;
    result.separator = std::move(st.chosen);
    std::sort(result.separator.begin(), result.separator.end());
  } else {
    result.feasible = false;
    result.witness = std::move(witness);
  }
  return result;
}

}  // namespace

SeparatorResult branch_solve_strict(const SeparatorInstance& inst) {
  if (inst.model != PathModel::Strict) {
    throw std::invalid_argument("branch_solve_strict requires the strict model");
  }
  return branch_solve(inst);
}

SeparatorResult branch_solve_nonstrict(const SeparatorInstance& inst) {
  if (inst.model != PathModel::NonStrict) {
    throw std::invalid_argument("branch_solve_nonstrict requires the non-strict model");
  }
  return branch_solve(inst);
}

std::optional<std::vector<VertexId>> min_separator_branching(const TemporalGraph& g,
                                                             VertexId s, VertexId z,
                                                             PathModel model) {
  if (g.has_pair(s, z)) return std::nullopt;
  Length lo = 0;
  Length hi = std::max<Length>(0, g.num_vertices() - 2);
  auto decide = [&](Length k) {
    return model == PathModel::Strict
               ? branch_solve_strict(SeparatorInstance(g, s, z, k, model))
               : branch_solve_nonstrict(SeparatorInstance(g, s, z, k, model));
  };
  std::vector<VertexId> best = decide(hi).separator;  // k = n-2 always feasible
  while (lo < hi) {
    const Length mid = lo + (hi - lo) / 2;
    auto result = decide(mid);
    if (result.feasible) {
      best = std::move(result.separator);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return best;
}

bool short_path_exists(const StaticGraph& g, VertexId s, VertexId z, Length l,
                       const std::vector<char>& removed) {
  if (removed[static_cast<std::size_t>(s)] || removed[static_cast<std::size_t>(z)]) {
    throw std::invalid_argument("terminals cannot be removed");
  }
  // Breadth-first search truncated at depth l.
  std::vector<Length> depth(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<VertexId> queue{s};
  depth[static_cast<std::size_t>(s)] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const VertexId u = queue[qi];
    if (depth[static_cast<std::size_t>(u)] == l) continue;
    for (VertexId w : g.neighbors(u)) {
      if (removed[static_cast<std::size_t>(w)] || depth[static_cast<std::size_t>(w)] >= 0) {
        continue;
      }
      if (w == z) return true;
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
      queue.push_back(w);
    }
  }
  return false;
}

LbsResult brute_force_lbs(const StaticGraph& g, VertexId s, VertexId z, Length k,
                          Length l) {
  LbsResult result;
  if (g.has_edge(s, z) && l >= 1) {
    result.status = LbsStatus::Inseparable;
    return result;
  }
  // Only vertices on some (s,z)-path of length <= l can appear in a
  // minimum separator; restrict enumeration to those.
  auto bfs_depths = [&](VertexId root) {
    std::vector<Length> depth(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<VertexId> queue{root};
    depth[static_cast<std::size_t>(root)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (VertexId w : g.neighbors(queue[qi])) {
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(queue[qi])] + 1;
          queue.push_back(w);
        }
      }
    }
    return depth;
  };
  auto from_s = bfs_depths(s);
  auto from_z = bfs_depths(z);
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == s || v == z) continue;
    if (from_s[static_cast<std::size_t>(v)] >= 0 && from_z[static_cast<std::size_t>(v)] >= 0 &&
        from_s[static_cast<std::size_t>(v)] + from_z[static_cast<std::size_t>(v)] <= l) {
      candidates.push_back(v);
    }
  }
  {
    // Work bound: sum of C(|candidates|, i) for i <= k, clamped.
    constexpr double kMaxSubsets = 2e7;
    double total = 0.0;
    double binom = 1.0;
    const double nc = static_cast<double>(candidates.size());
    for (Length i = 0; i <= std::min<Length>(k, static_cast<Length>(candidates.size()));
         ++i) {
      total += binom;
      if (total > kMaxSubsets) {
        throw std::invalid_argument("instance too large for subset enumeration");
      }
      binom *= (nc - static_cast<double>(i)) / static_cast<double>(i + 1);
    }
  }

  std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()), 0);
  const Length max_size = std::min<Length>(k, static_cast<Length>(candidates.size()));
  for (Length m = 0; m <= max_size; ++m) {
    std::vector<VertexId> found;
    const bool ok = for_each_combination(
        candidates, static_cast<std::size_t>(m), [&](const std::vector<VertexId>& subset) {
          for (VertexId v : subset) removed[static_cast<std::size_t>(v)] = 1;
          const bool separated = !short_path_exists(g, s, z, l, removed);
          for (VertexId v : subset) removed[static_cast<std::size_t>(v)] = 0;
          if (separated) {
            found = subset;
            return true;
          }
          return false;
        });
    if (ok) {
      result.status = LbsStatus::Found;
      result.separator = std::move(found);
      return result;
    }
  }
  result.status = LbsStatus::ExceedsBudget;
  return result;
}

}  // namespace tempsep
