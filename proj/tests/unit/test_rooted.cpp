#include "doctest.h"
#include "reconf/generate.hpp"
#include "reconf/oracle.hpp"
#include "reconf/rooted.hpp"

using namespace reconf;

TEST_SUITE("rooted") {
  TEST_CASE("fixed arc partition") {
    // r=0 a=1 b=2 c=3
    Digraph g(4, {{0, 1}, {1, 2}, {1, 3}});
    auto t = validate_directed_tree(g, ArcSet{0, 1});
    auto tt = validate_directed_tree(g, ArcSet{0, 2});
    auto p = fixed_arc_partition(g, t, tt);
    CHECK(p.fixed == ArcSet{0});
    CHECK(p.unfixed == ArcSet{1});
    CHECK(fixed_arc_partition(g, t, t).fixed == t.arcs());
    Digraph h(3, {{0, 1}, {0, 2}});
    auto q = fixed_arc_partition(h, validate_directed_tree(h, ArcSet{0}),
                                 validate_directed_tree(h, ArcSet{1}));
    CHECK(q.fixed.empty());
    CHECK(q.unfixed == ArcSet{0});
  }

  TEST_CASE("fixed-root sequences") {
    Digraph g(3, {{0, 1}, {0, 2}});
    auto a = validate_directed_tree(g, ArcSet{0});
    auto b = validate_directed_tree(g, ArcSet{1});
    CHECK(fixed_root_sequence(g, a, a).length() == 0);
    auto seq = fixed_root_sequence(g, a, b);
    CHECK(seq == ReconfigSequence{{ArcSet{0}, ArcSet{1}}});
    Digraph h(3, {{0, 1}, {1, 2}, {2, 1}});
    CHECK_THROWS_AS(fixed_root_sequence(h, validate_directed_tree(h, ArcSet{0}),
                                        validate_directed_tree(h, ArcSet{1})),
                    InvalidInput);
  }

  TEST_CASE("rooted forests through parallel arcs") {
    Digraph g(3, {{0, 2}, {1, 2}});
    auto seq = rooted_forest_sequence(g, ArcSet{0}, ArcSet{1}, VertexSet{0, 1});
    CHECK(seq == ReconfigSequence{{ArcSet{0}, ArcSet{1}}});
    CHECK(rooted_forest_sequence(g, ArcSet{0}, ArcSet{0}, VertexSet{0, 1}).length() == 0);
    CHECK_THROWS_AS(rooted_forest_sequence(g, ArcSet{0}, ArcSet{1}, VertexSet{0}),
                    InvalidStructure);
  }

  TEST_CASE("random same-root pairs stay rooted and take at most k steps") {
    Random rng(3);
    for (int round = 0; round < 80; ++round) {
      Digraph g = random_digraph(5, 0.45, rng);
      for (std::size_t k = 1; k <= 3; ++k) {
        for (VertexId r = 0; r < 5; ++r) {
          auto a = random_tree_at(g, r, k, rng);
          auto b = random_tree_at(g, r, k, rng);
          if (!a || !b) continue;
          auto ta = validate_directed_tree(g, *a);
          auto tb = validate_directed_tree(g, *b);
          auto seq = fixed_root_sequence(g, ta, tb);
          auto member = [&](const IdSet& s) {
            auto t = as_directed_tree(g, s);
            return t && t->root() == r;
          };
          REQUIRE(validate_sequence(member, seq, *a, *b).valid);
          CHECK(seq.length() <= k);
          CHECK(seq.length() <= fixed_arc_partition(g, ta, tb).unfixed.size());
          CHECK(oracle_decide(rooted_tree_family(g, k, r), *a, *b));
        }
      }
    }
  }

  TEST_CASE("random R-forest pairs keep their roots") {
    Random rng(9);
    for (int round = 0; round < 80; ++round) {
      Digraph g = random_digraph(5, 0.4, rng);
      VertexSet roots{0, static_cast<VertexId>(1 + rng.below(4))};
      for (std::size_t k = 1; k <= 3; ++k) {
        auto a = random_rooted_forest(g, k, roots, rng);
        auto b = random_rooted_forest(g, k, roots, rng);
        if (!a || !b) continue;
        auto seq = rooted_forest_sequence(g, *a, *b, roots);
        auto member = [&](const IdSet& s) { return is_rooted_forest(g, s, roots); };
        REQUIRE(validate_sequence(member, seq, *a, *b).valid);
        CHECK(seq.length() <= k);
      }
    }
  }
}
