#include <doctest.h>

#include <random>

#include "romdom/graph.hpp"
#include "romdom/oracle.hpp"
#include "romdom/roman.hpp"
#include "test_util.hpp"

using namespace romdom;
using namespace romdom::testutil;

namespace {

RomanFunction fn(const Graph& g, const std::string& digits) {
  return parse_function(digits, g.order());
}

}  // namespace

TEST_SUITE_BEGIN("roman");

TEST_CASE("weight and level sets") {
  Graph p3 = generate_family("path", 3);
  CHECK(fn(p3, "111").weight() == 3);
  CHECK(fn(p3, "020").weight() == 2);
  Graph rem = generate_family("remark-graph", 0);
  CHECK(fn(rem, "00200200").weight() == 4);
  CHECK(fn(p3, "020").level_set(2) == std::vector<int>{1});
  CHECK(fn(p3, "020").level_set(0) == std::vector<int>{0, 2});
}

TEST_CASE("function parsing") {
  Graph p3 = generate_family("path", 3);
  CHECK(parse_function("020", 3).to_digits() == "020");
  CHECK(parse_function("0 0\n1 2\n2 0\n", 3).to_digits() == "020");
  CHECK(parse_function("1 2", 3).to_digits() == "020");  // unlisted are 0
  CHECK_THROWS(parse_function("02", 3));
  CHECK_THROWS(parse_function("1 3", 3));
  CHECK_THROWS(parse_function("7 1", 3));
}

TEST_CASE("rdf / prdf / urrdf checkers") {
  Graph p3 = generate_family("path", 3);
  Graph p2 = generate_family("path", 2);
  Graph c4 = generate_family("cycle", 4);

  CHECK(is_rdf(p3, fn(p3, "020")));
  CHECK(!is_rdf(p3, fn(p3, "011")));
  CHECK(is_rdf(p2, fn(p2, "11")));

  CHECK(is_prdf(c4, fn(c4, "0201")));
  CHECK(!is_prdf(c4, fn(c4, "0202")));
  CHECK(is_prdf(c4, fn(c4, "1111")));

  CHECK(is_urrdf(p2, fn(p2, "20")));
  CHECK(!is_urrdf(p3, fn(p3, "212")));
  CHECK(is_urrdf(p3, fn(p3, "020")));

  SUBCASE("length mismatch throws") {
    CHECK_THROWS_AS(is_rdf(p3, fn(p2, "11")), std::invalid_argument);
  }
  SUBCASE("explain variant names a witness") {
    auto why = check_rdf(p3, fn(p3, "011"));
    REQUIRE(why.has_value());
    CHECK(why->vertex == 0);
  }
}

TEST_CASE("urrdf implies prdf implies rdf") {
  std::mt19937 rng(3);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = random_graph(rng, n, 0.5);
    RomanFunction f = random_function(rng, n);
    if (is_urrdf(g, f)) CHECK(is_prdf(g, f));
    if (is_prdf(g, f)) CHECK(is_rdf(g, f));
  }
}

TEST_CASE("minimality characterizations on spec fixtures") {
  Graph p3 = generate_family("path", 3);
  CHECK(is_minimal_prdf(p3, fn(p3, "020")));
  CHECK(!is_minimal_prdf(p3, fn(p3, "120")));
  CHECK(is_minimal_rdf(p3, fn(p3, "020")));
  CHECK(is_minimal_rdf(p3, fn(p3, "201")));
  Graph k3 = generate_family("complete", 3);
  CHECK(!is_minimal_rdf(k3, fn(k3, "220")));
  Graph rem = generate_family("remark-graph", 0);
  CHECK(is_minimal_prdf(rem, fn(rem, "00200111")));
}

TEST_CASE("minimality characterizations equal brute minimality (n <= 4)") {
  // the exhaustive n=5 sweep runs in the acceptance suite
  OracleLimits limits;
  for (int n = 0; n <= 4; ++n) {
    for (unsigned long mask = 0; mask < (1UL << edge_slots(n)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      auto mr = digit_set(brute_enumerate(g, Property::MinimalRdf, limits));
      auto mp = digit_set(brute_enumerate(g, Property::MinimalPrdf, limits));
      // every assignment: characterization vs membership in the brute sets
      std::vector<std::uint8_t> vals(n, 0);
      for (;;) {
        RomanFunction f(vals);
        bool in_mr = std::binary_search(mr.begin(), mr.end(), f.to_digits());
        bool in_mp = std::binary_search(mp.begin(), mp.end(), f.to_digits());
        CHECK(is_minimal_rdf(g, f) == in_mr);
        CHECK(is_minimal_prdf(g, f) == in_mp);
        int i = n - 1;
        while (i >= 0 && vals[i] == 2) vals[i--] = 0;
        if (i < 0) break;
        ++vals[i];
      }
    }
  }
}

TEST_CASE("minimality characterizations, sampled graphs at n = 6") {
  OracleLimits limits;
  std::mt19937 rng(31);
  for (int round = 0; round < 100; ++round) {
    const int n = 6;
    Graph g = random_graph(rng, n, 0.5);
    auto mr = digit_set(brute_enumerate(g, Property::MinimalRdf, limits));
    auto mp = digit_set(brute_enumerate(g, Property::MinimalPrdf, limits));
    std::vector<std::uint8_t> vals(n, 0);
    for (;;) {
      RomanFunction f(vals);
      CHECK(is_minimal_rdf(g, f) ==
            std::binary_search(mr.begin(), mr.end(), f.to_digits()));
      CHECK(is_minimal_prdf(g, f) ==
            std::binary_search(mp.begin(), mp.end(), f.to_digits()));
      int i = n - 1;
      while (i >= 0 && vals[i] == 2) vals[i--] = 0;
      if (i < 0) break;
      ++vals[i];
    }
  }
}

TEST_CASE("packing correspondence") {
  Graph p3 = generate_family("path", 3);
  CHECK(pack_to_urrdf(p3, TwoPacking{{}}).to_digits() == "111");
  CHECK(pack_to_urrdf(p3, TwoPacking{{1}}).to_digits() == "020");
  CHECK(pack_to_urrdf(p3, TwoPacking{{0}}).to_digits() == "201");
  CHECK_THROWS_AS(pack_to_urrdf(p3, TwoPacking{{0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pack_to_urrdf(p3, TwoPacking{{0, 2}}),
                  std::invalid_argument);

  Graph p2 = generate_family("path", 2);
  CHECK(urrdf_to_pack(p2, fn(p2, "20")).members == std::vector<int>{0});
  CHECK(urrdf_to_pack(p3, fn(p3, "020")).members == std::vector<int>{1});
  Graph m2 = generate_family("matching", 2);
  CHECK(urrdf_to_pack(m2, fn(m2, "2011")).members == std::vector<int>{0});
  CHECK_THROWS_AS(urrdf_to_pack(p3, fn(p3, "212")), std::invalid_argument);
}

TEST_CASE("packing bijection is onto the urRDFs") {
  std::mt19937 rng(17);
  for (int round = 0; round < 60; ++round) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.4);
    auto packs = brute_enumerate_two_packings(g);
    std::vector<RomanFunction> images;
    for (const auto& s : packs) {
      RomanFunction f = pack_to_urrdf(g, TwoPacking{s});
      CHECK(is_urrdf(g, f));
      CHECK(urrdf_to_pack(g, f).members == s);  // round trip
      images.push_back(f);
    }
    CHECK(digit_set(images) == digit_set(brute_enumerate(g, Property::Urrdf)));
  }
}

TEST_CASE("bijection B on the remark graph") {
  Graph rem = generate_family("remark-graph", 0);
  RomanFunction f = fn(rem, "00200200");
  REQUIRE(is_minimal_rdf(rem, f));
  RomanFunction bf = bijection_b(rem, f);
  CHECK(bf.to_digits() == "00211200");
  CHECK(is_minimal_prdf(rem, bf));
  CHECK(bijection_b_inverse(rem, bf) == f);

  Graph p3 = generate_family("path", 3);
  CHECK(bijection_b(p3, fn(p3, "020")).to_digits() == "020");
  CHECK(bijection_b(p3, fn(p3, "111")).to_digits() == "111");
  CHECK(bijection_b_inverse(p3, fn(p3, "020")).to_digits() == "020");

  RomanFunction g = fn(rem, "00200111");
  CHECK(bijection_b_inverse(rem, g) == g);

  CHECK_THROWS_AS(bijection_b(p3, fn(p3, "022")), std::invalid_argument);
}

TEST_CASE("bijection B round trips and preserves V2") {
  std::mt19937 rng(29);
  for (int round = 0; round < 50; ++round) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.4);
    auto min_rdfs = brute_enumerate(g, Property::MinimalRdf);
    auto min_prdfs = brute_enumerate(g, Property::MinimalPrdf);
    CHECK(min_rdfs.size() == min_prdfs.size());
    std::vector<RomanFunction> images;
    for (const auto& f : min_rdfs) {
      RomanFunction bf = bijection_b(g, f);
      CHECK(is_minimal_prdf(g, bf));
      CHECK(bf.level_set(2) == f.level_set(2));
      CHECK(bf.weight() >= f.weight());
      CHECK(bijection_b_inverse(g, bf) == f);
      images.push_back(bf);
    }
    CHECK(digit_set(images) == digit_set(min_prdfs));
    for (const auto& h : min_prdfs)
      CHECK(bijection_b(g, bijection_b_inverse(g, h)) == h);
  }
}

TEST_SUITE_END();
