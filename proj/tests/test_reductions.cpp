#include <doctest.h>

#include <random>

#include "romdom/graph.hpp"
#include "romdom/oracle.hpp"
#include "romdom/reductions.hpp"
#include "romdom/solvers.hpp"
#include "test_util.hpp"

using namespace romdom;
using namespace romdom::testutil;

TEST_SUITE_BEGIN("reductions");

TEST_CASE("perfect domination gadget structure") {
  Graph src = generate_family("path", 2);
  auto out = gadget_perfect_domination_split(src, 1);
  int n = 2, t = 3 * n + 4;
  CHECK(out.graph.order() == 2 + n + n * t + 2 * t);
  CHECK(out.graph.order() == 44);
  CHECK(out.budget == 1 + n + 4);
  CHECK(recognize_split(out.graph).has_value());
  CHECK(graph_well_formed(out.graph));
  CHECK_THROWS_AS(gadget_perfect_domination_split(src, 3),
                  std::invalid_argument);

  SUBCASE("always split, deterministic layout") {
    std::mt19937 rng(101);
    for (int round = 0; round < 10; ++round) {
      int m = 1 + static_cast<int>(rng() % 3);
      Graph g = random_graph(rng, m, 0.5);
      int k = 1 + static_cast<int>(rng() % m);
      auto a = gadget_perfect_domination_split(g, k);
      auto b = gadget_perfect_domination_split(g, k);
      CHECK(recognize_split(a.graph).has_value());
      CHECK(a.graph.edges() == b.graph.edges());
      CHECK(a.annotation == b.annotation);
    }
  }
}

TEST_CASE("perfect domination gadget equivalence via the budget solver") {
  for (int n = 1; n <= 2; ++n) {
    for (unsigned long mask = 0; mask < (1UL << edge_slots(n)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      for (int k = 1; k <= n; ++k) {
        bool source_yes = has_perfect_dominating_set(g, k);
        auto out = gadget_perfect_domination_split(g, k);
        auto part = recognize_split(out.graph);
        REQUIRE(part.has_value());
        bool gadget_yes =
            solve_prdf_split_fpt(out.graph, *part,
                                 static_cast<int>(*out.budget))
                .has_value();
        CHECK(source_yes == gadget_yes);
      }
    }
  }
}

TEST_CASE("irredundant gadget structure") {
  Graph src = generate_family("path", 3);
  for (int k = 1; k <= 3; ++k) {
    auto out = gadget_irredundant_extension(src, k);
    REQUIRE(out.presolution.has_value());
    CHECK(out.presolution->weight() == k + 4);
    CHECK(out.graph.order() == (k + 1) * src.order() + k + 4);
    CHECK(is_bipartite(out.graph));
    CHECK(graph_well_formed(out.graph));
  }
  CHECK_THROWS_AS(gadget_irredundant_extension(src, 0), std::invalid_argument);
}

TEST_CASE("irredundant gadget equivalence (tiny corpus)") {
  // n <= 3 here; the n = 4 sweep runs in the acceptance suite
  for (int n = 1; n <= 3; ++n) {
    for (unsigned long mask = 0; mask < (1UL << edge_slots(n)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      for (int k = 1; k <= std::min(n, 2); ++k) {
        auto out = gadget_irredundant_extension(g, k);
        OracleLimits limits;
        limits.max_order = out.graph.order();
        bool gadget_yes = brute_extension(out.graph, *out.presolution, limits);
        CHECK(gadget_yes == has_irredundant_set(g, k));
        // the polynomial solver must agree with the brute decider here
        CHECK(extend_prdf(out.graph, *out.presolution).has_value() ==
              gadget_yes);
      }
    }
  }
}

TEST_CASE("multicolored dominating set gadget structure") {
  Graph src = generate_family("path", 4);
  std::vector<std::vector<int>> classes{{0, 1}, {2, 3}};
  auto out = gadget_multicolored_ds_extension(src, classes);
  REQUIRE(out.presolution.has_value());
  CHECK(out.graph.order() == 2 * 4 + 2 + 2);
  CHECK(out.presolution->level_set(0).size() == classes.size() + 1);
  CHECK(is_bipartite(out.graph));
  CHECK(graph_well_formed(out.graph));
  CHECK_THROWS_AS(
      gadget_multicolored_ds_extension(src, {{0, 1}, {1, 2, 3}}),
      std::invalid_argument);
  CHECK_THROWS_AS(gadget_multicolored_ds_extension(src, {{0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("multicolored dominating set gadget equivalence (tiny corpus)") {
  for (int n = 1; n <= 3; ++n) {
    for (unsigned long mask = 0; mask < (1UL << edge_slots(n)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      // k = 1 and all 2-class partitions
      std::vector<std::vector<std::vector<int>>> partitions;
      {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        partitions.push_back({all});
      }
      for (unsigned long sm = 1; n >= 2 && sm < (1UL << (n - 1)); ++sm) {
        std::vector<int> w1{0}, w2;
        for (int v = 1; v < n; ++v)
          ((sm >> (v - 1)) & 1 ? w1 : w2).push_back(v);
        if (!w2.empty()) partitions.push_back({w1, w2});
      }
      for (const auto& classes : partitions) {
        auto out = gadget_multicolored_ds_extension(g, classes);
        OracleLimits limits;
        limits.max_order = out.graph.order();
        bool gadget_yes = brute_extension(out.graph, *out.presolution, limits);
        CHECK(gadget_yes == has_multicolored_dominating_set(g, classes));
        CHECK(extend_prdf(out.graph, *out.presolution).has_value() ==
              gadget_yes);
      }
    }
  }
}

TEST_CASE("source problem deciders") {
  Graph k2 = generate_family("complete", 2);
  CHECK(has_perfect_dominating_set(k2, 1));
  CHECK(!has_irredundant_set(k2, 2));
  CHECK(has_irredundant_set(k2, 1));
  Graph p4 = generate_family("path", 4);
  CHECK(has_irredundant_set(p4, 2));
  CHECK(has_multicolored_dominating_set(p4, {{0, 1}, {2, 3}}));
  Graph e2(2);
  CHECK(!has_perfect_dominating_set(e2, 1));
  CHECK(has_perfect_dominating_set(e2, 2));
}

TEST_SUITE_END();
