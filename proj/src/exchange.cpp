#include "reconf/exchange.hpp"

#include <stdexcept>

namespace reconf {

namespace {

void require_spanning(const Digraph& g, const TreeView& t, const char* which) {
  if (t.vertices().size() != g.vertex_count()) {
    throw InvalidInput(std::string(which) + " is not a spanning tree: covers " +
                       std::to_string(t.vertices().size()) + " of " +
                       std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

ExchangePair spanning_tree_exchange_step(const Digraph& g, const TreeView& t,
                                         const TreeView& t_target) {
  require_spanning(g, t, "current tree");
  require_spanning(g, t_target, "target tree");
  if (t.arcs() == t_target.arcs()) {
    throw InvalidInput("spanning_tree_exchange_step: trees are equal");
  }
  if (t.root() == t_target.root()) {
    // Breadth-first over the target: the first arc missing from t has its
    // whole root path inside t.
    for (ArcId a : t_target.arcs_top_down()) {
      if (t.arcs().contains(a)) continue;
      return {t.parent_arc(g.head(a)), a};
    }
    throw std::logic_error("equal-root spanning trees with no differing arc");
  }
  const ArcId into_root = t_target.parent_arc(t.root());
  for (ArcId a : t.path_from_root(g.tail(into_root))) {
    if (!t_target.arcs().contains(a)) return {a, into_root};
  }
  // The t-path plus into_root is a directed cycle, which t_target cannot hold.
  throw std::logic_error("root path contained in the target tree");
}

ReconfigSequence shortest_spanning_sequence(const Digraph& g,
                                            const TreeView& t_source,
                                            const TreeView& t_target) {
  require_spanning(g, t_source, "source tree");
  require_spanning(g, t_target, "target tree");
  ReconfigSequence seq{{t_source.arcs()}};
  TreeView current = t_source;
  while (current.arcs() != t_target.arcs()) {
    ExchangePair step = spanning_tree_exchange_step(g, current, t_target);
    current = validate_directed_tree(g, apply(current.arcs(), step));
    seq.steps.push_back(current.arcs());
  }
  return seq;
}

ExchangePair forest_exchange_step(const Digraph& g, const ForestView& f,
                                  const ForestView& f_target) {
  if (f.size() != f_target.size()) {
    throw InvalidInput("forest_exchange_step: forests differ in size");
  }
  if (f.arcs == f_target.arcs) {
    throw InvalidInput("forest_exchange_step: forests are equal");
  }
  std::vector<int> component(g.vertex_count(), -1);
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    for (VertexId v : f.components[i].vertices()) component[v] = static_cast<int>(i);
  }

  const ArcSet missing = set_difference(f_target.arcs, f.arcs);
  for (ArcId a : missing) {
    const int ct = component[g.tail(a)];
    const int ch = component[g.head(a)];
    if (ct != -1 && ct == ch) continue;
    // f + a has no undirected cycle; the only possible defect is a second
    // arc into head(a).
    const VertexId v = g.head(a);
    if (ch != -1) {
      ArcId into = f.components[ch].parent_arc(v);
      if (into != kNoArc) {
        if (f_target.arcs.contains(into)) {
          throw std::logic_error("target forest has two arcs into a vertex");
        }
        return {into, a};
      }
    }
    return {set_difference(f.arcs, f_target.arcs).front(), a};
  }

  // Every target arc lies inside one component of f; each component's share
  // of the target is a spanning tree of that component's vertex set.
  for (const TreeView& part : f.components) {
    std::vector<ArcId> share;
    const int id = component[part.root()];
    for (ArcId a : f_target.arcs) {
      if (component[g.tail(a)] == id) share.push_back(a);
    }
    if (share.size() != part.size()) {
      throw std::logic_error("component sizes disagree between forests");
    }
    ArcSet target_part(std::move(share));
    if (target_part == part.arcs()) continue;

    VertexSet vertices(std::vector<VertexId>(part.vertices().begin(),
                                             part.vertices().end()));
    InducedSubgraph sub = induced_subgraph(g, vertices);
    auto to_sub = [&](const ArcSet& s) {
      std::vector<ArcId> ids;
      for (ArcId a : s) ids.push_back(sub.original_to_arc[a]);
      return ArcSet(std::move(ids));
    };
    TreeView current = validate_directed_tree(sub.graph, to_sub(part.arcs()));
    TreeView goal = validate_directed_tree(sub.graph, to_sub(target_part));
    ExchangePair step = spanning_tree_exchange_step(sub.graph, current, goal);
    return {sub.arc_to_original[step.remove], sub.arc_to_original[step.add]};
  }
  throw std::logic_error("distinct forests with identical components");
}

ReconfigSequence shortest_forest_sequence(const Digraph& g,
                                          const ForestView& f_source,
                                          const ForestView& f_target) {
  if (f_source.size() != f_target.size()) {
    throw InvalidInput("shortest_forest_sequence: forests differ in size");
  }
  ReconfigSequence seq{{f_source.arcs}};
  ForestView current = f_source;
  while (current.arcs != f_target.arcs) {
    ExchangePair step = forest_exchange_step(g, current, f_target);
    current = validate_directed_forest(g, apply(current.arcs, step));
    seq.steps.push_back(current.arcs);
  }
  return seq;
}

}  // namespace reconf
