#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tempsep/expansion.hpp"
#include "tempsep/generators.hpp"
#include "tempsep/pathfinding.hpp"

using namespace tempsep;

namespace {

// Vertex layout used by the hand-written fixtures: s=0, z=1, others from 2.
constexpr VertexId S = 0;
constexpr VertexId Z = 1;

std::vector<std::pair<std::int32_t, std::int32_t>> arc_pairs(
    const StrictStaticExpansion& h) {
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  for (const auto& a : h.arcs()) pairs.emplace_back(a.from, a.to);
  return pairs;
}

}  // namespace

TEST_CASE("expansion of a two-edge chain matches the hand trace") {
  // s-a at 1, a-z at 2; phi(a) = {1,2,3}.
  const VertexId a = 2;
  TemporalGraph g(3, {{S, a, 1}, {a, Z, 2}}, 2);
  auto h = build_expansion(g, S, Z);

  REQUIRE(h.num_nodes() == 5);  // source, sink, (a,1), (a,2), (a,3)
  CHECK(h.node_of(a, 1) >= 0);
  CHECK(h.node_of(a, 2) >= 0);
  CHECK(h.node_of(a, 3) >= 0);
  CHECK(h.node_of(a, 4) == -1);

  std::size_t source_arcs = 0, sink_arcs = 0, transit = 0, column = 0;
  for (const auto& arc : h.arcs()) {
    switch (arc.kind) {
      case ExpansionArcKind::SourceArc:
        ++source_arcs;
        CHECK(arc.from == h.source_node());
        CHECK(arc.to == h.node_of(a, 2));
        break;
      case ExpansionArcKind::SinkArc:
        ++sink_arcs;
        CHECK(arc.from == h.node_of(a, 2));
        CHECK(arc.to == h.sink_node());
        break;
      case ExpansionArcKind::Transit:
        ++transit;
        break;
      case ExpansionArcKind::Column:
        ++column;
        CHECK(arc.weight == 0);
        break;
    }
  }
  CHECK(source_arcs == 1);
  CHECK(sink_arcs == 1);
  CHECK(transit == 0);
  CHECK(column == 2);  // (a,1)->(a,2)->(a,3)
}

TEST_CASE("expansion of an edgeless graph") {
  TemporalGraph g(4, {}, 3);
  auto h = build_expansion(g, S, Z);
  CHECK(h.num_nodes() == 2);
  CHECK(h.num_arcs() == 0);
}

TEST_CASE("expansion of one edge away from the terminals") {
  const VertexId a = 2, b = 3;
  TemporalGraph g(4, {{a, b, 1}}, 1);
  auto h = build_expansion(g, S, Z);
  CHECK(h.num_nodes() == 2 + 4);  // terminals + (a,1),(a,2),(b,1),(b,2)
  std::size_t transit = 0, column = 0, terminal_arcs = 0;
  for (const auto& arc : h.arcs()) {
    if (arc.kind == ExpansionArcKind::Transit) ++transit;
    if (arc.kind == ExpansionArcKind::Column) ++column;
    if (arc.kind == ExpansionArcKind::SourceArc || arc.kind == ExpansionArcKind::SinkArc) {
      ++terminal_arcs;
    }
  }
  CHECK(transit == 2);
  CHECK(column == 2);
  CHECK(terminal_arcs == 0);
}

TEST_CASE("expansions are acyclic on random inputs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = gen_random_temporal(7, 5, {.edge_probability = 0.35, .seed = seed});
    auto h = build_expansion(g, S, Z);
    CHECK(oracle::is_acyclic(h.num_nodes(), arc_pairs(h)));
    auto h2 = build_expansion(g, S);
    CHECK(oracle::is_acyclic(h2.num_nodes(), arc_pairs(h2)));
  }
}

TEST_CASE("ssstp fixtures") {
  SUBCASE("direct edge dominates a longer detour") {
    const VertexId a = 2, b = 3;
    TemporalGraph g(4, {{S, a, 1}, {a, b, 2}, {S, b, 3}}, 3);
    auto d = ssstp(g, S);
    CHECK(d[S] == 0);
    CHECK(d[a] == 1);
    CHECK(d[b] == 1);
  }
  SUBCASE("labels must increase") {
    const VertexId a = 2, b = 3;
    TemporalGraph g(4, {{S, a, 2}, {a, b, 1}}, 2);
    auto d = ssstp(g, S);
    CHECK(d[a] == 1);
    CHECK(!d.reachable(b));
  }
}

TEST_CASE("ssstp equals the exhaustive oracle") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto g = gen_random_temporal(8, 5, {.edge_probability = 0.3, .seed = seed});
    auto got = ssstp(g, S);
    auto want = oracle::strict_distances(g, S);
    for (VertexId v = 0; v < 8; ++v) CHECK(got[v] == want[static_cast<std::size_t>(v)]);

    // Designated-sink variant: distances avoid the sink column, and the
    // expansion represents no direct (s,z) edge, so compare on pair-free
    // instances only.
    auto h = gen_random_temporal(
        8, 5, {.edge_probability = 0.3, .seed = seed, .forbid_pair = true});
    auto got_z = ssstp(h, S, Z);
    auto want_z = oracle::strict_distances(h, S, Z);
    for (VertexId v = 0; v < 8; ++v) CHECK(got_z[v] == want_z[static_cast<std::size_t>(v)]);
  }
}

TEST_CASE("finite distances never exceed the edge count") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = gen_random_temporal(7, 4, {.edge_probability = 0.4, .seed = seed});
    auto d = ssstp(g, S);
    CHECK(d[S] == 0);
    for (VertexId v = 0; v < 7; ++v) {
      if (d.reachable(v)) CHECK(d[v] <= static_cast<Length>(g.num_edges()));
    }
  }
}

TEST_CASE("ssstp_to_sink fixtures and oracle equivalence") {
  SUBCASE("single edge into z at the horizon") {
    const VertexId a = 2;
    TemporalGraph g(3, {{a, Z, 4}}, 4);
    auto d = ssstp_to_sink(g, Z);
    CHECK(d[a] == 1);
  }
  SUBCASE("time-symmetric graphs agree with the forward run") {
    // Symmetric under t -> tau+1-t.
    const VertexId a = 2, b = 3;
    TemporalGraph g(4, {{Z, a, 1}, {a, b, 2}, {b, Z, 3}, {Z, b, 1}, {a, Z, 3}}, 3);
    CHECK(reverse_time(g) == g);
    auto to_sink = ssstp_to_sink(g, Z);
    auto from_z = ssstp(g, Z);
    for (VertexId v = 0; v < 4; ++v) CHECK(to_sink[v] == from_z[v]);
  }
  SUBCASE("random graphs match the reversed oracle") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto g = gen_random_temporal(8, 5, {.edge_probability = 0.3, .seed = seed});
      auto got = ssstp_to_sink(g, Z);
      auto want = oracle::strict_distances(reverse_time(g), Z);
      for (VertexId v = 0; v < 8; ++v) CHECK(got[v] == want[static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("shortest strict path witnesses are valid and shortest") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = gen_random_temporal(
        7, 4, {.edge_probability = 0.35, .seed = seed, .forbid_pair = true});
    auto path = shortest_strict_path(g, S, Z);
    auto dist = ssstp(g, S, Z);
    if (!path) {
      CHECK(!dist.reachable(Z));
      continue;
    }
    CHECK(validate_path(g, *path, PathModel::Strict, S, Z));
    CHECK(static_cast<Length>(path->length()) == dist[Z]);
  }
}

TEST_CASE("every strict path corresponds to an expansion path of equal weight") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto g = gen_random_temporal(
        7, 4, {.edge_probability = 0.3, .seed = seed, .forbid_pair = true});
    auto h = build_expansion(g, S, Z);
    auto paths = oracle::all_strict_paths(g, S, Z);

    // Constructive direction: walk each temporal path through the
    // expansion, using column arcs to bridge waiting times.
    for (const auto& path : paths) {
      std::int32_t at = h.source_node();
      Length weight = 0;
      for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const auto& st = path.steps[i];
        const bool last = i + 1 == path.steps.size();
        std::int32_t target = last && st.to == Z
                                  ? h.sink_node()
                                  : h.node_of(st.to, st.t + 1);
        REQUIRE(target >= 0);
        // There must be a single arc of weight 1 from some node of the
        // current column (or the source) to the target's column entry at
        // st.t+1; column arcs cost nothing.
        bool found = false;
        for (const auto& a : h.arcs()) {
          if (a.kind == ExpansionArcKind::Column) continue;
          if (a.to != target) continue;
          const auto& from_node = h.nodes()[static_cast<std::size_t>(a.from)];
          if (at == h.source_node()) {
            if (a.from == h.source_node() &&
                (st.from == S)) {
              found = true;
              break;
            }
          } else if (from_node.kind == ExpansionNodeKind::Grid &&
                     from_node.vertex == st.from && from_node.time == st.t) {
            found = true;
            break;
          }
        }
        CHECK(found);
        at = target;
        weight += 1;
      }
      CHECK(weight == static_cast<Length>(path.length()));
    }

    // Converse at the optimum: the expansion's shortest (s,z) weight
    // matches the shortest strict path length.
    auto d = ssstp(g, S, Z);
    if (!paths.empty()) {
      auto shortest = std::min_element(paths.begin(), paths.end(),
                                       [](const auto& x, const auto& y) {
                                         return x.length() < y.length();
                                       });
      CHECK(d[Z] == static_cast<Length>(shortest->length()));
    } else {
      CHECK(!d.reachable(Z));
    }
  }
}

TEST_CASE("strict earliest arrival") {
  SUBCASE("same-label hops do not chain") {
    const VertexId a = 2;
    TemporalGraph g(3, {{S, a, 1}, {a, Z, 1}}, 1);
    auto arrival = strict_earliest_arrival(g, S, {});
    CHECK(arrival[a] == 1);
    CHECK(arrival[Z] == kInfiniteTime);
  }
  SUBCASE("avoiding the relay blocks z") {
    const VertexId a = 2;
    TemporalGraph g(3, {{S, a, 1}, {a, Z, 2}}, 2);
    std::vector<VertexId> avoid{a};
    auto arrival = strict_earliest_arrival(g, S, avoid);
    CHECK(arrival[Z] == kInfiniteTime);
  }
  SUBCASE("reachability agrees with ssstp") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto g = gen_random_temporal(8, 4, {.edge_probability = 0.3, .seed = seed});
      auto arrival = strict_earliest_arrival(g, S, {});
      auto d = ssstp(g, S);
      for (VertexId v = 0; v < 8; ++v) {
        CHECK((arrival[static_cast<std::size_t>(v)] != kInfiniteTime) == d.reachable(v));
      }
    }
  }
}

TEST_CASE("non-strict reachability") {
  SUBCASE("two hops within one layer") {
    const VertexId a = 2;
    TemporalGraph g(3, {{S, a, 1}, {a, Z, 1}}, 1);
    CHECK(nonstrict_reachable(g, S, {})[Z]);
    std::vector<VertexId> avoid{a};
    CHECK(!nonstrict_reachable(g, S, avoid)[Z]);
  }
  SUBCASE("matches the exhaustive oracle") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto g = gen_random_temporal(8, 4, {.edge_probability = 0.25, .seed = seed});
      auto got = nonstrict_reachable(g, S, {});
      auto want = oracle::nonstrict_reachable(g, S, {});
      for (VertexId v = 0; v < 8; ++v) {
        CHECK(got[static_cast<std::size_t>(v)] == want[static_cast<std::size_t>(v)]);
      }
    }
  }
  SUBCASE("strict reachability is contained in non-strict") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      auto g = gen_random_temporal(7, 4, {.edge_probability = 0.3, .seed = seed});
      auto strict_arrival = strict_earliest_arrival(g, S, {});
      auto nonstrict = nonstrict_reachable(g, S, {});
      for (VertexId v = 0; v < 7; ++v) {
        if (strict_arrival[static_cast<std::size_t>(v)] != kInfiniteTime) {
          CHECK(nonstrict[static_cast<std::size_t>(v)]);
        }
      }
    }
  }
  SUBCASE("monotone non-increasing in the avoided set") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto g = gen_random_temporal(7, 3, {.edge_probability = 0.35, .seed = seed});
      std::vector<VertexId> small{2};
      std::vector<VertexId> large{2, 4, 5};
      auto r_small = nonstrict_reachable(g, S, small);
      auto r_large = nonstrict_reachable(g, S, large);
      for (VertexId v = 0; v < 7; ++v) {
        if (r_large[static_cast<std::size_t>(v)]) CHECK(r_small[static_cast<std::size_t>(v)]);
      }
    }
  }
}

TEST_CASE("non-strict path witnesses are valid") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = gen_random_temporal(7, 3, {.edge_probability = 0.3, .seed = seed});
    auto witness = nonstrict_path_witness(g, S, Z, {});
    if (witness) {
      CHECK(validate_path(g, *witness, PathModel::NonStrict, S, Z));
    } else {
      CHECK(!nonstrict_reachable(g, S, {})[Z]);
    }
  }
}

TEST_CASE("traversal-time distances") {
  SUBCASE("single slow arc") {
    DirectedTemporalGraph d(3, {{0, 2, 1, 3}}, 4);
    auto times = ssstp_traversal(d, 0);
    CHECK(times[2] == 3);
  }
  SUBCASE("unit traversal agrees with hop counts") {
    DirectedTemporalGraph d(4, {{0, 2, 1, 1}, {2, 3, 2, 1}, {0, 3, 3, 1}}, 3);
    auto times = ssstp_traversal(d, 0);
    CHECK(times[2] == 1);
    CHECK(times[3] == 1);
  }
  SUBCASE("zero traversal is rejected") {
    CHECK_THROWS_AS(DirectedTemporalGraph(2, {{0, 1, 1, 0}}, 2), std::invalid_argument);
  }
  SUBCASE("random instances match the exhaustive oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      const VertexId n = 6;
      const TimeLabel tau = 4;
      std::vector<DirectedTimeArc> arcs;
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
          if (u == v) continue;
          for (TimeLabel t = 1; t <= tau; ++t) {
            if ((rng() >> 11) * 0x1.0p-53 < 0.12) {
              arcs.push_back({u, v, t, static_cast<TimeLabel>(1 + rng() % 3)});
            }
          }
        }
      }
      DirectedTemporalGraph d(n, arcs, tau);
      auto got = ssstp_traversal(d, 0);
      auto want = oracle::traversal_times(d, 0);
      for (VertexId v = 0; v < n; ++v) {
        CHECK(got[static_cast<std::size_t>(v)] == want[static_cast<std::size_t>(v)]);
      }
    }
  }
}
