#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tempsep/instance.hpp"
#include "tempsep/io.hpp"
#include "tempsep/static_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

struct VertexCoverInstance {
  StaticGraph graph;
  Length k = 0;
};

/// Vertex Cover -> non-strict temporal separation with tau = 2: per
/// vertex v a gadget {s_v, v, z_v} with six time-edges, per edge two
/// edge-edges at label 1, budget n + k. Ids: v in [0,n), s_v = n + 2v,
/// z_v = n + 2v + 1, s = 3n, z = 3n + 1; |V'| = 3n + 2 and
/// |E'| = 6n + 2|E| exactly. Minimum separators have size n + vc(G).
SeparatorInstance gen_from_vertex_cover(const VertexCoverInstance& inst);

/// Length-bounded separation -> strict temporal separation: every edge
/// of G is copied into each of the layers 1..l, so strict separators
/// coincide with separators against paths of length <= l.
SeparatorInstance gen_lbs_stack(const StaticGraph& g, VertexId s, VertexId z, Length k,
                                Length l);

/// Output of the planar length-bounded reduction, with the gadget
/// structure exposed for validation.
struct PlanarLbsOutput {
  StaticGraph graph;
  VertexId s = 0;
  VertexId z = 0;
  Length k = 0;        // budget, unchanged
  Length l_prime = 0;  // 2 + (l+1) k' + l ((l+1) k' + 1)
  Length k_prime = 0;  // (2k+2)^2 - 1
  VertexId grid_side = 0;
  /// Per source vertex, the six connector sets (position 1..6 at index
  /// 0..5), each of k+1 grid vertices in formula order.
  std::vector<std::array<std::vector<VertexId>, 6>> connectors;
  /// First vertex id of each source vertex's grid gadget.
  std::vector<VertexId> grid_base;
};

/// Planar Length-Bounded Cut (edge costs in {1, k+1}) -> planar
/// Length-Bounded Separation: one (2k+2)x(2k+2) grid gadget per vertex,
/// path gadgets joining connector sets for cost-1 edges, planar matchings
/// of k+1 long paths for cost-(k+1) edges, fresh terminals attached to
/// untouched connector sets. Costs, degree bounds and parity are
/// validated; odd k is rejected.
PlanarLbsOutput gen_planar_lbs(const PlanarLbcInstance& inst);

struct RandomTemporalOptions {
  double edge_probability = 0.2;
  std::uint64_t seed = 1;
  /// When set, never emit a time-edge joining these two vertices.
  bool forbid_pair = false;
  VertexId forbidden_a = 0;
  VertexId forbidden_b = 1;
};

/// Seeded random temporal graph: every (pair, label) combination is
/// included independently with the given probability. Identical seeds
/// give identical graphs on every platform.
TemporalGraph gen_random_temporal(VertexId n, TimeLabel tau,
                                  const RandomTemporalOptions& options);

}  // namespace tempsep
