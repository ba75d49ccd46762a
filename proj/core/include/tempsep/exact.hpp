#pragma once

#include <optional>
#include <vector>

#include "tempsep/instance.hpp"
#include "tempsep/static_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

/// Subset-enumeration guard for the brute-force minimum searches.
inline constexpr VertexId kBruteForceMaxVertices = 26;

/// Minimum temporal (s,z)-separator under the given model by subset
/// enumeration in order of increasing size, ties broken lexicographically
/// (so the result is the lexicographically smallest minimum separator).
/// Returns nullopt exactly when a direct (s,z) time-edge makes separation
/// impossible. Uses only the reachability predicates. Guarded by
/// kBruteForceMaxVertices.
std::optional<std::vector<VertexId>> brute_force_min_separator(const TemporalGraph& g,
                                                               VertexId s, VertexId z,
                                                               PathModel model);

/// Budget-k decision via the brute-force minimum.
SeparatorResult brute_force_decide(const SeparatorInstance& inst);

/// Search-tree solver for the strict model: branch on the interior
/// vertices of a shortest strict (s,z)-path (at most tau-1 of them),
/// recursing with a decremented budget; the search tree has size at most
/// (tau-1)^k.
SeparatorResult branch_solve_strict(const SeparatorInstance& inst);

/// Same branching scheme with the non-strict path extractor. Correct but
/// worst-case exponential in n (non-strict paths can have up to n-1
/// interior vertices).
SeparatorResult branch_solve_nonstrict(const SeparatorInstance& inst);

/// Minimum separator size via the branching decision, binary-searching
/// the budget in [0, n-2]. Returns nullopt when inseparable.
std::optional<std::vector<VertexId>> min_separator_branching(const TemporalGraph& g,
                                                             VertexId s, VertexId z,
                                                             PathModel model);

enum class LbsStatus { Found, ExceedsBudget, Inseparable };

struct LbsResult {
  LbsStatus status = LbsStatus::Found;
  std::vector<VertexId> separator;
};

/// Minimum length-bounded (s,z)-separator of a static graph: smallest
/// vertex set (s,z excluded) destroying all (s,z)-paths of length <= l,
/// by subset enumeration with a depth-limited breadth-first reachability
/// predicate. An {s,z} edge is Inseparable; a minimum above the budget
/// reports ExceedsBudget. Enumeration restricts itself to vertices lying
/// on some short path, which no minimum separator can avoid using.
LbsResult brute_force_lbs(const StaticGraph& g, VertexId s, VertexId z, Length k,
                          Length l);

/// True iff some (s,z)-path of length <= l survives in g - removed.
bool short_path_exists(const StaticGraph& g, VertexId s, VertexId z, Length l,
                       const std::vector<char>& removed);

}  // namespace tempsep
