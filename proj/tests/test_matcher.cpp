#include <doctest.h>

#include <random>

#include "negraph/matcher.hpp"
#include "negraph/pattern.hpp"
#include "support.hpp"

using namespace negraph;
using test_support::binding_is_sound;
using test_support::brute_force_match;

TEST_CASE("fig. 2a: chain rule matches effusion through the propagated edge") {
  auto g = test_support::fig2a_graph();
  QueryGraph q = compile(parse_pattern(test_support::kRule2a));

  auto binding = match_anchored(g, q, 9);  // effusion
  REQUIRE(binding.has_value());
  CHECK(binding->assignment.at(0) == 9);
  CHECK(binding->assignment.at(1) == 3);  // clear
  CHECK(binding->scope == std::set<int>{3, 9});
  CHECK(binding_is_sound(g, q, 9, *binding));

  // infiltrates matches through the direct edge.
  CHECK(match_any(g, q, 6));
  // the subject does not.
  CHECK_FALSE(match_any(g, q, 1));
}

TEST_CASE("fig. 2b: grouped chain rule matches disease") {
  auto g = test_support::fig2b_graph();
  QueryGraph q = compile(parse_pattern(test_support::kRule2bCorrected));
  CHECK(match_any(g, q, 7));
  auto binding = match_anchored(g, q, 7);
  REQUIRE(binding.has_value());
  CHECK(binding->scope == std::set<int>{3, 4, 7});  // no, evidence, disease

  // The paper's printed direction (`<neg`) would need the edge
  // no -> evidence, which the printed graph does not contain.
  QueryGraph printed = compile(parse_pattern(test_support::kRule2bPrinted));
  CHECK_FALSE(match_any(g, printed, 7));
}

TEST_CASE("fig. 2c: sub-graph rule binds the sibling negation particle") {
  auto g = test_support::fig2c_graph();
  QueryGraph q = compile(parse_pattern(test_support::kRule2c));
  auto binding = match_anchored(g, q, 2);  // infiltrate
  REQUIRE(binding.has_value());
  CHECK(binding->assignment.at(0) == 2);
  CHECK(binding->assignment.at(1) == 5);            // excluded
  CHECK(binding->assignment.at(2) == 4);            // not
  CHECK(binding->scope == std::set<int>{2, 4, 5});
  CHECK(binding_is_sound(g, q, 2, *binding));
}

TEST_CASE("isolated start vertex cannot satisfy any arc") {
  auto g = test_support::make_graph("iso", {{"a", "a"}, {"b", "b"}}, {});
  QueryGraph q = compile(parse_pattern("{} <neg {}"));
  CHECK_FALSE(match_anchored(g, q, 1).has_value());
}

TEST_CASE("single wildcard query matches any vertex") {
  auto g = test_support::fig2c_graph();
  QueryGraph q = compile(parse_pattern("{}"));
  for (int v = 1; v <= g.size(); ++v) {
    auto binding = match_anchored(g, q, v);
    REQUIRE(binding.has_value());
    CHECK(binding->scope == std::set<int>{v});
  }
}

TEST_CASE("unknown start vertex is an error") {
  auto g = test_support::fig2c_graph();
  QueryGraph q = compile(parse_pattern("{}"));
  CHECK_THROWS_AS(match_anchored(g, q, 0), Error);
  CHECK_THROWS_AS(match_anchored(g, q, 100), Error);
  CHECK_THROWS_AS(match_all(g, q, 100), Error);
}

TEST_CASE("labels match exactly: <nmod does not cover nmod:of") {
  auto g = test_support::fig2a_graph();
  QueryGraph bare = compile(parse_pattern("{} <nmod {lemma:/clear/}"));
  CHECK_FALSE(match_any(g, bare, 9));

  SUBCASE("unless prefix matching is switched on") {
    MatchOptions opts;
    opts.label_prefix_match = true;
    CHECK(match_any(g, bare, 9, opts));
    // Prefix matching respects the ':' boundary.
    QueryGraph partial = compile(parse_pattern("{} <nm {lemma:/clear/}"));
    CHECK_FALSE(match_any(g, partial, 9, opts));
  }
}

TEST_CASE("sibling query nodes must bind distinct vertices") {
  // One b-dependent: two sibling wildcards cannot share it.
  auto one = test_support::make_graph("one", {{"x", "x"}, {"y", "y"}},
                                      {{1, 2, "b"}});
  QueryGraph q = compile(parse_pattern("{} >b ({}) >b ({})"));
  CHECK_FALSE(match_any(one, q, 1));

  // With two b-dependents the siblings split up.
  auto two = test_support::make_graph(
      "two", {{"x", "x"}, {"y", "y"}, {"z", "z"}},
      {{1, 2, "b"}, {1, 3, "b"}});
  auto binding = match_anchored(two, q, 1);
  REQUIRE(binding.has_value());
  CHECK(binding->assignment.at(1) != binding->assignment.at(2));
  CHECK(binding->scope == std::set<int>{1, 2, 3});
}

TEST_CASE("non-sibling nodes may revisit a vertex unless global injectivity") {
  // x -a-> y and y -a-> x: grandparent and grandchild may coincide.
  auto g = test_support::make_graph("loop", {{"x", "x"}, {"y", "y"}},
                                    {{1, 2, "a"}, {2, 1, "a"}});
  QueryGraph q = compile(parse_pattern("{} >a ({} >a {})"));
  auto binding = match_anchored(g, q, 1);
  REQUIRE(binding.has_value());
  CHECK(binding->assignment.at(0) == 1);
  CHECK(binding->assignment.at(1) == 2);
  CHECK(binding->assignment.at(2) == 1);
  CHECK(binding->scope == std::set<int>{1, 2});

  MatchOptions opts;
  opts.global_injectivity = true;
  CHECK_FALSE(match_any(g, q, 1, opts));
}

TEST_CASE("first match follows ascending candidate order") {
  auto g = test_support::make_graph(
      "ord", {{"root", "root"}, {"a", "a"}, {"a", "a"}},
      {{1, 2, "d"}, {1, 3, "d"}});
  QueryGraph q = compile(parse_pattern("{} >d {lemma:/a/}"));
  auto binding = match_anchored(g, q, 1);
  REQUIRE(binding.has_value());
  CHECK(binding->assignment.at(1) == 2);

  auto all = match_all(g, q, 1);
  REQUIRE(all.size() == 2);
  CHECK(all[0].assignment.at(1) == 2);
  CHECK(all[1].assignment.at(1) == 3);
}

TEST_CASE("match agrees with the brute-force oracle on random instances") {
  std::mt19937 rng(20170901);
  int positives = 0;
  for (int round = 0; round < 2500; ++round) {
    auto inst = test_support::random_instance(rng);
    const bool expected =
        brute_force_match(inst.graph, inst.query, inst.start);
    auto binding = match_anchored(inst.graph, inst.query, inst.start);
    REQUIRE(binding.has_value() == expected);
    if (binding) {
      ++positives;
      CHECK(binding_is_sound(inst.graph, inst.query, inst.start, *binding));
      CHECK(binding->scope.count(inst.start) == 1);
      CHECK(binding->scope.size() <= inst.query.nodes.size());
    }
  }
  // The generator must exercise both outcomes.
  CHECK(positives > 100);
  CHECK(positives < 2400);
}

TEST_CASE("matching is deterministic") {
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    auto inst = test_support::random_instance(rng);
    auto a = match_anchored(inst.graph, inst.query, inst.start);
    auto b = match_anchored(inst.graph, inst.query, inst.start);
    CHECK(a == b);
    CHECK(match_all(inst.graph, inst.query, inst.start) ==
          match_all(inst.graph, inst.query, inst.start));
  }
}

TEST_CASE("every match_all binding is sound and distinct") {
  std::mt19937 rng(8);
  for (int round = 0; round < 300; ++round) {
    auto inst = test_support::random_instance(rng);
    auto all = match_all(inst.graph, inst.query, inst.start);
    for (const auto& b : all)
      CHECK(binding_is_sound(inst.graph, inst.query, inst.start, b));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        CHECK(all[i].assignment != all[j].assignment);
  }
}
