#include "tempsep/tau4.hpp"

#include <algorithm>
#include <stdexcept>

#include "tempsep/dpcg.hpp"
#include "tempsep/max_flow.hpp"
#include "tempsep/pathfinding.hpp"
#include "tempsep/preprocessing.hpp"

namespace tempsep {

namespace {

void verify_strict_separation(const TemporalGraph& g, VertexId s, VertexId z,
                              const std::vector<VertexId>& separator) {
  auto arrival = strict_earliest_arrival(g, s, separator);
  if (arrival[static_cast<std::size_t>(z)] != kInfiniteTime) {
    throw std::logic_error("tau4 solver produced a non-separating set");
  }
}

}  // namespace

SeparatorResult solve_strict_tau4(const SeparatorInstance& inst) {
  if (inst.model != PathModel::Strict) {
    throw std::invalid_argument("tau4 solver requires the strict model");
  }
  TemporalGraph normalized = normalize_time_labels(inst.graph);
  if (normalized.tau() > 4) {
    throw std::invalid_argument("normalized tau is " + std::to_string(normalized.tau()) +
                                " > 4; use an exact solver instead");
  }
  if (normalized.tau() < 4) normalized = normalized.with_tau(4);

  auto reduced = reduce_instance(
      SeparatorInstance(std::move(normalized), inst.s, inst.z, inst.k, PathModel::Strict));
  SeparatorResult result;
  switch (reduced.kind) {
    case ReduceOutcome::Kind::DecidedYes:
      result.feasible = true;
      result.separator = reduced.separator;
      std::sort(result.separator.begin(), result.separator.end());
      verify_strict_separation(inst.graph, inst.s, inst.z, result.separator);
      return result;
    case ReduceOutcome::Kind::DecidedNo:
      result.feasible = false;
      result.witness = reduced.witness;
      return result;
    case ReduceOutcome::Kind::Reduced:
      break;
  }

  const auto& sub = *reduced.instance;
  auto d = build_dpcg(sub.graph, sub.s, sub.z);
  auto cut = min_vertex_separator_static(d.digraph, sub.s, sub.z, sub.k);
  // A direct (s,z) arc cannot occur: reduced graphs have no (s,z)
  // time-edge, and the path cover graph only links time-edge pairs.
  if (cut.status == CutStatus::Inseparable) {
    throw std::logic_error("path cover graph of a reduced instance has an (s,z) arc");
  }
  if (cut.status == CutStatus::ExceedsBudget) {
    result.feasible = false;
    result.witness = shortest_strict_path(sub.graph, sub.s, sub.z);
    return result;
  }
  result.feasible = true;
  result.separator = reduced.removed;
  result.separator.insert(result.separator.end(), cut.separator.begin(),
                          cut.separator.end());
  std::sort(result.separator.begin(), result.separator.end());
  verify_strict_separation(inst.graph, inst.s, inst.z, result.separator);
  return result;
}

}  // namespace tempsep
