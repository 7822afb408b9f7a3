#include "reconf/feedback.hpp"

#include <deque>
#include <unordered_map>

#include "reconf/families.hpp"

namespace reconf {

bool is_feedback_vertex_set(const Digraph& g, const VertexSet& x) {
  g.check_vertex_set(x);
  std::vector<ArcId> touching;
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arcs()[a];
    if (x.contains(arc.tail) || x.contains(arc.head)) {
      touching.push_back(static_cast<ArcId>(a));
    }
  }
  return is_acyclic_without(g, ArcSet(std::move(touching)));
}

bool is_feedback_arc_set(const Digraph& g, const ArcSet& y) {
  return is_acyclic_without(g, y);
}

bool FeedbackInstance::is_member(const IdSet& s) const {
  return mode == FeedbackMode::kVertex ? is_feedback_vertex_set(graph, s)
                                       : is_feedback_arc_set(graph, s);
}

void FeedbackInstance::check() const {
  if (source.size() != target.size()) {
    throw InvalidInput("feedback sets differ in size");
  }
  for (const IdSet* s : {&source, &target}) {
    if (mode == FeedbackMode::kVertex) {
      graph.check_vertex_set(*s);
    } else {
      graph.check_arc_set(*s);
    }
    if (!is_member(*s)) {
      throw InvalidStructure(to_string(*s) + " is not a feedback " +
                             (mode == FeedbackMode::kVertex ? "vertex" : "arc") +
                             " set");
    }
  }
}

std::optional<ReconfigSequence> solve_feedback_reconfig(
    const FeedbackInstance& inst, std::size_t state_guard) {
  inst.check();
  const std::size_t universe = inst.mode == FeedbackMode::kVertex
                                   ? inst.graph.vertex_count()
                                   : inst.graph.arc_count();
  std::vector<IdSet> order{inst.source};
  std::vector<std::size_t> previous{0};
  std::unordered_map<IdSet, std::size_t, IdSetHash> index{{inst.source, 0}};
  if (inst.source == inst.target) return ReconfigSequence{{inst.source}};
  bool found = false;
  for (std::size_t head = 0; head < order.size() && !found; ++head) {
    const IdSet current = order[head];
    for (auto out : current) {
      for (std::size_t in = 0; in < universe && !found; ++in) {
        const auto id = static_cast<std::int32_t>(in);
        if (current.contains(id)) continue;
        IdSet next = current.exchanged(out, id);
        if (index.count(next) != 0 || !inst.is_member(next)) continue;
        if (order.size() >= state_guard) {
          throw GuardExceeded("feedback search exceeded the state guard", state_guard);
        }
        index.emplace(next, order.size());
        previous.push_back(head);
        found = next == inst.target;
        order.push_back(std::move(next));
      }
      if (found) break;
    }
  }
  if (!found) return std::nullopt;
  ReconfigSequence seq;
  for (std::size_t i = order.size() - 1;; i = previous[i]) {
    seq.steps.push_back(order[i]);
    if (i == 0) break;
  }
  std::reverse(seq.steps.begin(), seq.steps.end());
  return seq;
}

ArcSet FeedbackReduction::map_vertex_set(const VertexSet& x) const {
  std::vector<ArcId> arcs;
  for (VertexId v : x) {
    if (v < 0 || static_cast<std::size_t>(v) >= original_vertex_count) {
      throw InvalidInput("map_vertex_set: invalid vertex " + std::to_string(v));
    }
    arcs.push_back(internal_arc(v));
  }
  return ArcSet(std::move(arcs));
}

VertexSet FeedbackReduction::project(const ArcSet& y) const {
  std::vector<VertexId> vertices;
  for (ArcId a : y) {
    if (is_internal(a)) vertices.push_back(a);
  }
  return VertexSet(std::move(vertices));
}

FeedbackReduction reduce_dfvs_to_dfas(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  FeedbackReduction r;
  r.original_vertex_count = n;
  std::vector<Arc> arcs;
  arcs.reserve(n + g.arc_count() * (n + 1));
  for (std::size_t v = 0; v < n; ++v) {
    arcs.push_back({static_cast<VertexId>(2 * v), static_cast<VertexId>(2 * v + 1)});
  }
  r.arc_copies.resize(g.arc_count());
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arcs()[e];
    for (std::size_t copy = 0; copy <= n; ++copy) {
      r.arc_copies[e].push_back(static_cast<ArcId>(arcs.size()));
      arcs.push_back({2 * a.tail + 1, 2 * a.head});
    }
  }
  r.graph = Digraph(2 * n, std::move(arcs));
  return r;
}

}  // namespace reconf
