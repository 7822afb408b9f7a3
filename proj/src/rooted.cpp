#include "reconf/rooted.hpp"

#include <stdexcept>

namespace reconf {

FixedPartition fixed_arc_partition(const Digraph& g, const TreeView& t,
                                   const TreeView& t_target) {
  if (t.root() != t_target.root()) {
    throw InvalidInput("fixed_arc_partition: roots differ (" +
                       std::to_string(t.root()) + " vs " +
                       std::to_string(t_target.root()) + ")");
  }
  std::vector<ArcId> fixed;
  std::vector<ArcId> unfixed;
  std::vector<char> is_fixed(g.vertex_count(), 0);  // by head vertex
  for (ArcId a : t.arcs_top_down()) {
    const VertexId tail = g.tail(a);
    const bool parent_ok = tail == t.root() || is_fixed[tail];
    if (parent_ok && t_target.arcs().contains(a)) {
      is_fixed[g.head(a)] = 1;
      fixed.push_back(a);
    } else {
      unfixed.push_back(a);
    }
  }
  return {ArcSet(std::move(fixed)), ArcSet(std::move(unfixed))};
}

ReconfigSequence fixed_root_sequence(const Digraph& g, const TreeView& t_source,
                                     const TreeView& t_target) {
  if (t_source.root() != t_target.root()) {
    throw InvalidInput("fixed_root_sequence: roots differ");
  }
  if (t_source.size() != t_target.size()) {
    throw InvalidInput("fixed_root_sequence: trees differ in size");
  }
  ReconfigSequence seq{{t_source.arcs()}};
  TreeView current = t_source;
  while (current.arcs() != t_target.arcs()) {
    // First target arc (breadth-first) missing from the current tree; its
    // root path is already shared.
    ArcId add = kNoArc;
    for (ArcId a : t_target.arcs_top_down()) {
      if (!current.arcs().contains(a)) {
        add = a;
        break;
      }
    }
    if (add == kNoArc) throw std::logic_error("no missing target arc");

    ArcId drop = kNoArc;
    const VertexId head = g.head(add);
    if (current.contains_vertex(head)) {
      drop = current.parent_arc(head);
    } else {
      const ArcSet unfixed = fixed_arc_partition(g, current, t_target).unfixed;
      for (ArcId leaf : leaf_arcs(current)) {
        if (unfixed.contains(leaf)) {
          drop = leaf;
          break;
        }
      }
      if (drop == kNoArc) throw std::logic_error("no unfixed leaf arc");
      if (g.head(drop) == g.tail(add)) {
        throw std::logic_error("chosen leaf arc would stop being a leaf");
      }
    }
    current = validate_directed_tree(g, current.arcs().exchanged(drop, add));
    if (current.root() != t_target.root()) {
      throw std::logic_error("fixed-root step moved the root");
    }
    seq.steps.push_back(current.arcs());
  }
  return seq;
}

ReconfigSequence rooted_forest_sequence(const Digraph& g, const ArcSet& f_source,
                                        const ArcSet& f_target,
                                        const VertexSet& roots) {
  if (roots.empty()) throw InvalidInput("rooted_forest_sequence: empty root set");
  g.check_vertex_set(roots);
  if (!is_rooted_forest(g, f_source, roots)) {
    throw InvalidStructure("source is not a forest rooted in " + to_string(roots));
  }
  if (!is_rooted_forest(g, f_target, roots)) {
    throw InvalidStructure("target is not a forest rooted in " + to_string(roots));
  }
  if (f_source.size() != f_target.size()) {
    throw InvalidInput("rooted_forest_sequence: forests differ in size");
  }
  if (f_source == f_target) return {{f_source}};

  Contraction c = contract(g, roots);
  auto to_contracted = [&](const ArcSet& s) {
    std::vector<ArcId> ids;
    for (ArcId a : s) ids.push_back(c.original_to_arc[a]);
    return ArcSet(std::move(ids));
  };
  TreeView source = validate_directed_tree(c.graph, to_contracted(f_source));
  TreeView target = validate_directed_tree(c.graph, to_contracted(f_target));
  ReconfigSequence inner = fixed_root_sequence(c.graph, source, target);

  ReconfigSequence out;
  for (const ArcSet& step : inner.steps) {
    std::vector<ArcId> ids;
    for (ArcId a : step) ids.push_back(c.arc_to_original[a]);
    out.steps.emplace_back(std::move(ids));
  }
  return out;
}

}  // namespace reconf
