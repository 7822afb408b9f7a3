#ifndef RECONF_FAMILIES_HPP
#define RECONF_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "reconf/digraph.hpp"

namespace reconf {

/// A validated directed (out-)tree: every vertex except the root has exactly
/// one incoming tree arc.
class TreeView {
 public:
  TreeView() = default;

  /// A 0-arc tree consisting of `root` alone.
  static TreeView bare(const Digraph& g, VertexId root);

  const ArcSet& arcs() const { return arcs_; }
  VertexId root() const { return root_; }
  std::size_t size() const { return arcs_.size(); }

  /// Vertices of the tree in breadth-first order from the root, children by
  /// ascending arc id.
  const std::vector<VertexId>& vertices() const { return order_; }
  bool contains_vertex(VertexId v) const;

  /// Tree arc entering `v`, kNoArc for the root and for vertices off the tree.
  ArcId parent_arc(VertexId v) const;
  /// Tree arcs leaving `v`, ascending.
  std::vector<ArcId> child_arcs(VertexId v) const;

  /// Tree arcs in breadth-first order from the root (parents before children).
  std::vector<ArcId> arcs_top_down() const;

  /// Arcs of the root -> v path in traversal order.
  std::vector<ArcId> path_from_root(VertexId v) const;

  /// Number of vertices of the host graph.
  std::size_t host_vertex_count() const { return parent_.size(); }

 private:
  friend std::optional<TreeView> as_directed_tree(const Digraph&, const ArcSet&,
                                                  std::string*);
  ArcSet arcs_;
  VertexId root_ = kNoVertex;
  std::vector<ArcId> parent_;         // indexed by vertex
  std::vector<VertexId> parent_tail_;  // indexed by vertex
  std::vector<std::vector<ArcId>> children_;
  std::vector<VertexId> order_;
  std::vector<ArcId> top_down_;
};

struct ForestView {
  std::vector<TreeView> components;  // ordered by root id
  VertexSet roots;
  ArcSet arcs;

  std::size_t size() const { return arcs.size(); }
  /// Index of the component holding `v`, or -1.
  int component_of(VertexId v) const;
};

struct PathView {
  ArcSet arcs;
  std::vector<VertexId> vertices;  // v_1 .. v_k

  VertexId tail() const { return vertices.front(); }
  VertexId head() const { return vertices.back(); }
};

/// Non-throwing checks. When the set is rejected and `why` is non-null, the
/// reason is written there.
std::optional<TreeView> as_directed_tree(const Digraph& g, const ArcSet& s,
                                         std::string* why = nullptr);
std::optional<ForestView> as_directed_forest(const Digraph& g, const ArcSet& s,
                                             std::string* why = nullptr);
std::optional<PathView> as_directed_path(const Digraph& g, const ArcSet& s,
                                         std::string* why = nullptr);

/// Throwing validators; errors are InvalidStructure. The empty set is not a
/// tree (its root would be unidentifiable) but is the empty forest.
TreeView validate_directed_tree(const Digraph& g, const ArcSet& s);
ForestView validate_directed_forest(const Digraph& g, const ArcSet& s);
PathView validate_directed_path(const Digraph& g, const ArcSet& s);

/// Arcs whose head has no outgoing tree arc, ascending id.
std::vector<ArcId> leaf_arcs(const TreeView& t);

/// True iff the sub-multigraph formed by `s` has no directed cycle.
bool is_acyclic(const Digraph& g, const ArcSet& s);

/// True iff the whole graph minus `removed` arcs is acyclic.
bool is_acyclic_without(const Digraph& g, const ArcSet& removed);

bool is_spanning_tree(const Digraph& g, const ArcSet& s);

/// Forest whose component roots all lie in `roots` and which has no arc
/// entering `roots`; equivalently, adding the members of `roots` as isolated
/// vertices gives a forest with root set exactly `roots`.
bool is_rooted_forest(const Digraph& g, const ArcSet& s, const VertexSet& roots);

}  // namespace reconf

#endif  // RECONF_FAMILIES_HPP
