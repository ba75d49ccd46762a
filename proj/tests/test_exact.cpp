#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tempsep/exact.hpp"
#include "tempsep/generators.hpp"
#include "tempsep/pathfinding.hpp"

using namespace tempsep;

namespace {
constexpr VertexId S = 0;
constexpr VertexId Z = 1;
}  // namespace

TEST_CASE("the model-difference instance") {
  const VertexId a = 2;
  TemporalGraph g(3, {{S, a, 1}, {a, Z, 1}}, 1);
  auto strict_min = brute_force_min_separator(g, S, Z, PathModel::Strict);
  auto nonstrict_min = brute_force_min_separator(g, S, Z, PathModel::NonStrict);
  REQUIRE(strict_min.has_value());
  REQUIRE(nonstrict_min.has_value());
  CHECK(strict_min->empty());
  CHECK(*nonstrict_min == std::vector<VertexId>{a});
}

TEST_CASE("two disjoint strict paths need two removals") {
  const VertexId a = 2, b = 3;
  TemporalGraph g(4, {{S, a, 1}, {a, Z, 2}, {S, b, 2}, {b, Z, 3}}, 3);
  auto minimum = brute_force_min_separator(g, S, Z, PathModel::Strict);
  REQUIRE(minimum.has_value());
  CHECK(minimum->size() == 2);
}

TEST_CASE("edgeless graphs need no separator") {
  TemporalGraph g(4, {}, 2);
  for (PathModel model : {PathModel::Strict, PathModel::NonStrict}) {
    auto minimum = brute_force_min_separator(g, S, Z, model);
    REQUIRE(minimum.has_value());
    CHECK(minimum->empty());
  }
}

TEST_CASE("direct edges are reported distinctly") {
  TemporalGraph g(3, {{S, Z, 1}}, 1);
  CHECK(!brute_force_min_separator(g, S, Z, PathModel::Strict).has_value());
  CHECK(!min_separator_branching(g, S, Z, PathModel::Strict).has_value());
}

TEST_CASE("the brute-force minimum is lexicographically smallest") {
  // Both {2} and {3} separate; 2 must win.
  TemporalGraph g(4, {{S, 2, 1}, {2, 3, 1}, {3, Z, 1}}, 1);
  auto minimum = brute_force_min_separator(g, S, Z, PathModel::NonStrict);
  REQUIRE(minimum.has_value());
  CHECK(*minimum == std::vector<VertexId>{2});
}

TEST_CASE("brute force agrees with the fully independent oracle") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto g = gen_random_temporal(
        7, 4, {.edge_probability = 0.3, .seed = seed, .forbid_pair = true});
    for (PathModel model : {PathModel::Strict, PathModel::NonStrict}) {
      auto lib = brute_force_min_separator(g, S, Z, model);
      auto ind = oracle::min_separator(g, S, Z, model);
      REQUIRE(lib.has_value());
      REQUIRE(ind.has_value());
      CHECK(*lib == *ind);
    }
  }
}

TEST_CASE("branching fixtures") {
  SUBCASE("generous budgets are always feasible without a direct edge") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto g = gen_random_temporal(
          6, 3, {.edge_probability = 0.4, .seed = seed, .forbid_pair = true});
      auto result =
          branch_solve_strict(SeparatorInstance(g, S, Z, 4, PathModel::Strict));
      CHECK(result.feasible);
    }
  }
  SUBCASE("budget zero with a live path is infeasible, witnessed") {
    const VertexId a = 2;
    TemporalGraph g(3, {{S, a, 1}, {a, Z, 2}}, 2);
    auto result = branch_solve_strict(SeparatorInstance(g, S, Z, 0, PathModel::Strict));
    REQUIRE(!result.feasible);
    REQUIRE(result.witness.has_value());
    CHECK(validate_path(g, *result.witness, PathModel::Strict, S, Z));
  }
  SUBCASE("model-difference instance under both branchers") {
    const VertexId a = 2;
    TemporalGraph g(3, {{S, a, 1}, {a, Z, 1}}, 1);
    CHECK(branch_solve_nonstrict(SeparatorInstance(g, S, Z, 1, PathModel::NonStrict))
              .feasible);
    CHECK(!branch_solve_nonstrict(SeparatorInstance(g, S, Z, 0, PathModel::NonStrict))
               .feasible);
    CHECK(branch_solve_strict(SeparatorInstance(g, S, Z, 0, PathModel::Strict)).feasible);
  }
}

TEST_CASE("branch solvers agree with brute force on the random grid") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const VertexId n = static_cast<VertexId>(4 + seed % 6);
    const TimeLabel tau = static_cast<TimeLabel>(1 + seed % 5);
    auto g = gen_random_temporal(
        n, tau,
        {.edge_probability = 0.15 + 0.08 * static_cast<double>(seed % 5),
         .seed = seed * 31, .forbid_pair = true});
    const Length k = static_cast<Length>(seed % 5);
    for (PathModel model : {PathModel::Strict, PathModel::NonStrict}) {
      SeparatorInstance inst(g, S, Z, k, model);
      auto branched = model == PathModel::Strict ? branch_solve_strict(inst)
                                                 : branch_solve_nonstrict(inst);
      auto minimum = brute_force_min_separator(g, S, Z, model);
      REQUIRE(minimum.has_value());
      CHECK(branched.feasible == (static_cast<Length>(minimum->size()) <= k));
      if (branched.feasible) {
        CHECK(static_cast<Length>(branched.separator.size()) <= k);
        auto reached = model == PathModel::Strict
                           ? oracle::strict_reachable(g, S, branched.separator)
                           : oracle::nonstrict_reachable(g, S, branched.separator);
        CHECK(!reached[Z]);
      } else {
        REQUIRE(branched.witness.has_value());
        CHECK(validate_path(g, *branched.witness, model, S, Z));
      }
    }
  }
}

TEST_CASE("branching minimum sizes equal brute force") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto g = gen_random_temporal(
        7, 4, {.edge_probability = 0.3, .seed = seed * 13, .forbid_pair = true});
    for (PathModel model : {PathModel::Strict, PathModel::NonStrict}) {
      auto lib = min_separator_branching(g, S, Z, model);
      auto want = brute_force_min_separator(g, S, Z, model);
      REQUIRE(lib.has_value());
      REQUIRE(want.has_value());
      CHECK(lib->size() == want->size());
    }
  }
}

TEST_CASE("strict minima never exceed non-strict minima") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = gen_random_temporal(
        7, 4, {.edge_probability = 0.35, .seed = seed * 7, .forbid_pair = true});
    auto strict_min = brute_force_min_separator(g, S, Z, PathModel::Strict);
    auto nonstrict_min = brute_force_min_separator(g, S, Z, PathModel::NonStrict);
    CHECK(strict_min->size() <= nonstrict_min->size());
  }
}

TEST_CASE("length-bounded separator oracle") {
  SUBCASE("one relay within reach") {
    StaticGraph g(3, {{S, 2}, {2, Z}});
    auto result = brute_force_lbs(g, S, Z, 3, 2);
    REQUIRE(result.status == LbsStatus::Found);
    CHECK(result.separator == std::vector<VertexId>{2});
  }
  SUBCASE("paths longer than the bound do not count") {
    StaticGraph g(4, {{S, 2}, {2, 3}, {3, Z}});
    auto result = brute_force_lbs(g, S, Z, 3, 2);
    REQUIRE(result.status == LbsStatus::Found);
    CHECK(result.separator.empty());
  }
  SUBCASE("edge between the terminals") {
    StaticGraph g(3, {{S, Z}, {S, 2}});
    CHECK(brute_force_lbs(g, S, Z, 1, 2).status == LbsStatus::Inseparable);
  }
  SUBCASE("budget exceeded") {
    StaticGraph g(4, {{S, 2}, {2, Z}, {S, 3}, {3, Z}});
    CHECK(brute_force_lbs(g, S, Z, 1, 2).status == LbsStatus::ExceedsBudget);
  }
  SUBCASE("random graphs match the independent oracle") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      auto g = oracle::random_static_graph(8, 0.3, seed);
      if (g.has_edge(S, Z)) continue;
      for (Length l = 1; l <= 5; ++l) {
        auto lib = brute_force_lbs(g, S, Z, 8, l);
        auto want = oracle::min_lbs(g, S, Z, l);
        REQUIRE(want.has_value());
        REQUIRE(lib.status == LbsStatus::Found);
        CHECK(static_cast<Length>(lib.separator.size()) == *want);
      }
    }
  }
}
