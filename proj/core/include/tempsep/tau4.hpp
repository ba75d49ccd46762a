#pragma once

#include "tempsep/instance.hpp"

namespace tempsep {

/// Strict temporal (s,z)-separation for maximum label tau <= 4 (after
/// label normalization), in O(k |E|): normalize, reduce, pad tau to 4,
/// build the directed path cover graph, and cut it with at most k'+1
/// augmenting-path rounds. Every yes-answer is re-verified against
/// strict reachability before it is returned. Throws
/// std::invalid_argument when the normalized tau exceeds 4.
SeparatorResult solve_strict_tau4(const SeparatorInstance& inst);

}  // namespace tempsep
