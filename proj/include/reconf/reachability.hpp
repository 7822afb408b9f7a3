#ifndef RECONF_REACHABILITY_HPP
#define RECONF_REACHABILITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "reconf/digraph.hpp"
#include "reconf/families.hpp"
#include "reconf/sequences.hpp"

namespace reconf {

/// Edge reason: G has a directed path `from` -> `to`.
struct PathCondition {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
};

/// Edge reason: `w` is an out-neighbour of both endpoints and `subtree` is a
/// w-rooted tree with k-1 arcs avoiding both endpoints.
struct CommonOutNeighbor {
  VertexId w = kNoVertex;
  ArcSet subtree;
};

using EdgeLabel = std::variant<PathCondition, CommonOutNeighbor>;

struct AuxEdge {
  VertexId u = kNoVertex;  // u < v
  VertexId v = kNoVertex;
  EdgeLabel label;
};

/// Undirected graph on the vertices that root some k-arc tree. Two roots are
/// adjacent when one reaches the other, or when they share an out-neighbour w
/// that roots a (k-1)-arc tree after deleting both of them. Roots of two
/// k-arc trees are connected here exactly when the trees are reconfigurable.
class AuxiliaryGraph {
 public:
  /// Requires k >= 2.
  AuxiliaryGraph(const Digraph& g, std::size_t k);

  std::size_t k() const { return k_; }
  std::size_t vertex_count() const { return node_index_.size(); }
  bool is_node(VertexId v) const;
  const std::vector<VertexId>& nodes() const { return nodes_; }
  const std::vector<AuxEdge>& edges() const { return edges_; }

  /// Edge between two nodes in either order, or null.
  const AuxEdge* edge(VertexId a, VertexId b) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;

  /// Fewest-edge walk between two nodes (inclusive), neighbours explored in
  /// ascending order.
  std::optional<std::vector<VertexId>> shortest_path(VertexId from,
                                                     VertexId to) const;
  bool connected(VertexId a, VertexId b) const;

  /// Stored breadth-first witness path for a path condition, arcs in order.
  std::vector<ArcId> witness_path(const PathCondition& c) const;

 private:
  std::uint64_t key(VertexId a, VertexId b) const;

  std::size_t k_;
  std::vector<int> node_index_;  // -1 for non-nodes
  std::vector<VertexId> nodes_;
  // BFS parent arcs from each node: parents_[node_index][vertex].
  std::vector<std::vector<ArcId>> parents_;
  std::vector<AuxEdge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> edge_lookup_;
  std::vector<std::vector<VertexId>> adjacency_;  // by node index
  std::vector<int> component_;                    // by node index
  std::vector<VertexId> arc_tails_;
};

/// |reachable_set(g, v)| >= k + 1.
bool root_tree_exists(const Digraph& g, VertexId v, std::size_t k);

/// The label under which distinct nodes u, v of the auxiliary graph are
/// adjacent: a path condition (u -> v checked first) or the smallest common
/// out-neighbour that works.
std::optional<EdgeLabel> roots_adjacent(const Digraph& g, VertexId u, VertexId v,
                                        std::size_t k);

AuxiliaryGraph build_auxiliary_graph(const Digraph& g, std::size_t k);

/// Whether t_target is reachable from t_source through k-arc directed trees.
/// k = 0 needs equal roots; k = 1 is always reachable.
bool decide(const Digraph& g, const TreeView& t_source, const TreeView& t_target);
bool decide(const AuxiliaryGraph& aux, const TreeView& t_source,
            const TreeView& t_target);

/// From a tree rooted at one endpoint of `arc` to some tree rooted at the
/// other endpoint. Forward arcs (root -> v) go through a fixed-root sequence
/// to a pivot one exchange from a v-rooted tree; reverse arcs (v -> root)
/// need a single exchange.
ReconfigSequence adjacent_root_step(const Digraph& g, const TreeView& t, ArcId arc);

/// Explicit sequence along a shortest auxiliary-graph path between the roots.
/// Throws InvalidInput when the trees are not reconfigurable.
ReconfigSequence build_sequence(const Digraph& g, const TreeView& t_source,
                                const TreeView& t_target);
ReconfigSequence build_sequence(const Digraph& g, const AuxiliaryGraph& aux,
                                const TreeView& t_source,
                                const TreeView& t_target);

/// Upper bound enforced on build_sequence output: 4 |V|^2 k.
std::size_t sequence_length_guard(const Digraph& g, std::size_t k);

}  // namespace reconf

#endif  // RECONF_REACHABILITY_HPP
