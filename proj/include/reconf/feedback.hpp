#ifndef RECONF_FEEDBACK_HPP
#define RECONF_FEEDBACK_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "reconf/digraph.hpp"
#include "reconf/errors.hpp"
#include "reconf/sequences.hpp"

namespace reconf {

enum class FeedbackMode { kVertex, kArc };

/// G[V \ x] is acyclic.
bool is_feedback_vertex_set(const Digraph& g, const VertexSet& x);
/// G - y is acyclic.
bool is_feedback_arc_set(const Digraph& g, const ArcSet& y);

struct FeedbackInstance {
  Digraph graph;
  IdSet source;
  IdSet target;
  FeedbackMode mode = FeedbackMode::kVertex;

  std::size_t k() const { return source.size(); }
  bool is_member(const IdSet& s) const;
  /// Throws InvalidStructure when either endpoint is not a feedback set of
  /// the stated kind, InvalidInput on size mismatch or bad ids.
  void check() const;
};

/// Shortest sequence of equal-size feedback sets under single exchanges, or
/// absent. Throws GuardExceeded past `state_guard` discovered states.
std::optional<ReconfigSequence> solve_feedback_reconfig(
    const FeedbackInstance& inst, std::size_t state_guard = kDefaultStateGuard);

/// Feedback vertex sets of g correspond to feedback arc sets of the result.
/// Vertex v becomes v_in = 2v and v_out = 2v + 1 joined by the internal arc
/// with id v; every arc (u, v) becomes |V| + 1 parallel arcs (u_out, v_in).
struct FeedbackReduction {
  Digraph graph;
  std::size_t original_vertex_count = 0;
  std::vector<std::vector<ArcId>> arc_copies;  // original arc -> parallel ids

  ArcId internal_arc(VertexId v) const { return v; }
  bool is_internal(ArcId a) const {
    return a >= 0 && static_cast<std::size_t>(a) < original_vertex_count;
  }
  /// Vertex set -> set of its internal arcs.
  ArcSet map_vertex_set(const VertexSet& x) const;
  /// Arc set -> vertices whose internal arcs it contains.
  VertexSet project(const ArcSet& y) const;
};

FeedbackReduction reduce_dfvs_to_dfas(const Digraph& g);

}  // namespace reconf

#endif  // RECONF_FEEDBACK_HPP
