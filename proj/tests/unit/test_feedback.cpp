#include "doctest.h"
#include "naive.hpp"
#include "reconf/feedback.hpp"
#include "reconf/generate.hpp"
#include "reconf/oracle.hpp"

using namespace reconf;

TEST_SUITE("feedback") {
  const Digraph triangle(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});

  TEST_CASE("membership") {
    CHECK(is_feedback_vertex_set(triangle, VertexSet{0, 1}));
    CHECK_FALSE(is_feedback_vertex_set(triangle, VertexSet{0}));
    Digraph two(2, {{0, 1}, {1, 0}});
    CHECK(is_feedback_arc_set(two, ArcSet{0}));
    CHECK_FALSE(is_feedback_arc_set(two, ArcSet{}));
    CHECK(is_feedback_vertex_set(Digraph(3, {{0, 1}}), VertexSet{}));
  }

  TEST_CASE("vertex mode on the bidirected triangle") {
    FeedbackInstance inst{triangle, VertexSet{0, 1}, VertexSet{1, 2}, FeedbackMode::kVertex};
    auto seq = solve_feedback_reconfig(inst);
    REQUIRE(seq.has_value());
    CHECK(seq->length() == 1);
    FeedbackInstance same{triangle, VertexSet{0, 1}, VertexSet{0, 1}, FeedbackMode::kVertex};
    CHECK(solve_feedback_reconfig(same)->length() == 0);
  }

  TEST_CASE("arc mode on a 2-cycle") {
    Digraph two(2, {{0, 1}, {1, 0}});
    FeedbackInstance inst{two, ArcSet{0}, ArcSet{1}, FeedbackMode::kArc};
    auto seq = solve_feedback_reconfig(inst);
    REQUIRE(seq.has_value());
    CHECK(seq->length() == 1);
    CHECK(oracle_distance(feedback_arc_family(two, 1), ArcSet{0}, ArcSet{1}) == 1u);
  }

  TEST_CASE("bad instances") {
    FeedbackInstance bad{triangle, VertexSet{0}, VertexSet{1}, FeedbackMode::kVertex};
    CHECK_THROWS_AS(solve_feedback_reconfig(bad), InvalidStructure);
    FeedbackInstance sizes{triangle, VertexSet{0, 1}, VertexSet{0, 1, 2},
                           FeedbackMode::kVertex};
    CHECK_THROWS_AS(solve_feedback_reconfig(sizes), InvalidInput);
  }

  TEST_CASE("reduction counts and maps") {
    auto r = reduce_dfvs_to_dfas(triangle);
    CHECK(r.graph.vertex_count() == 6);
    CHECK(r.graph.arc_count() == 3 + 6 * 4);
    CHECK(r.map_vertex_set(VertexSet{}).empty());
    CHECK(r.map_vertex_set(VertexSet{0, 2}) == ArcSet{0, 2});
    CHECK(r.project(ArcSet{0, 2}) == VertexSet{0, 2});
    for (const auto& copies : r.arc_copies) CHECK(copies.size() == 4);
    CHECK(r.is_internal(2));
    CHECK_FALSE(r.is_internal(3));
  }

  TEST_CASE("acyclicity agrees with a naive check") {
    Random rng(8);
    for (int round = 0; round < 100; ++round) {
      Digraph g = random_digraph(5, 0.35, rng);
      for (int k = 0; k <= 3; ++k) {
        for (const auto& s : naive::subsets(5, k)) {
          VertexSet x(std::vector<VertexId>(s.begin(), s.end()));
          REQUIRE(is_feedback_vertex_set(g, x) ==
                  naive::acyclic_without_vertices(g, std::set<int>(s.begin(), s.end())));
        }
      }
    }
  }
}
