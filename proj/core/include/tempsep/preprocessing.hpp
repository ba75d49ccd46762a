#pragma once

#include <optional>
#include <vector>

#include "tempsep/instance.hpp"
#include "tempsep/temporal_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

/// Shifts labels so that every layer 1..tau' holds at least one edge
/// (single pass with a running offset over each maximal empty interval)
/// and trims trailing empty layers, giving tau' <= |E|. Preserves the
/// temporal (s,z)-paths of both models up to label renaming. Idempotent.
TemporalGraph normalize_time_labels(const TemporalGraph& g);

/// normalize_time_labels applied to an instance's graph.
SeparatorInstance normalize_instance(const SeparatorInstance& inst);

/// Reduced-graph property check for (G,s,z): (i) the non-isolated part
/// plus the terminals is connected in the underlying graph, (ii) every
/// time-edge lies on a strict (s,z)-walk, (iii) no strict (s,z)-path of
/// length at most two exists.
struct ReducedCheck {
  bool connected = false;
  bool every_edge_used = false;
  bool no_short_path = false;

  bool ok() const { return connected && every_edge_used && no_short_path; }
};

ReducedCheck check_reduced(const TemporalGraph& g, VertexId s, VertexId z);

/// Outcome of reduce_instance: either the instance is decided outright,
/// or an equivalent reduced instance is produced.
struct ReduceOutcome {
  enum class Kind { DecidedYes, DecidedNo, Reduced };

  Kind kind = Kind::DecidedYes;
  /// DecidedYes: a strict separator certificate (possibly empty).
  std::vector<VertexId> separator;
  /// DecidedNo: a strict (s,z)-path surviving any budget.
  std::optional<TemporalPath> witness;
  /// Reduced: the equivalent instance with budget k' = k - |removed|.
  std::optional<SeparatorInstance> instance;
  /// Interior vertices of length-two paths removed along the way; they
  /// belong to every separator of the original instance.
  std::vector<VertexId> removed;
};

/// The strict-model preprocessing: keeps only time-edges on some strict
/// (s,z)-walk (via forward/backward reachability in the expansion),
/// decides the instance when z is unreachable or a direct (s,z) time-edge
/// exists, and peels interior vertices of length-two paths while
/// decrementing the budget — more than k of those makes it a no-instance.
ReduceOutcome reduce_instance(const SeparatorInstance& inst);

/// Maps a strict instance to an equivalent non-strict instance: each
/// time-edge ({v,w},t) becomes two edge-vertices joined to v and w by
/// four time-edges at labels 2t-1 and 2t. Sizes are exactly
/// |V'| = |V| + 2|E|, |E'| = 4|E|, tau' = 2 tau, k' = k.
SeparatorInstance strict_to_nonstrict(const SeparatorInstance& inst);

}  // namespace tempsep
