#ifndef RECONF_DIGRAPH_HPP
#define RECONF_DIGRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "reconf/errors.hpp"
#include "reconf/id_set.hpp"

namespace reconf {

struct Arc {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable directed multigraph with dense vertex ids 0..n-1 and dense arc
/// ids 0..m-1. Parallel arcs are kept apart by id; self-loops are rejected.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t vertex_count, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const Arc& arc(ArcId a) const;
  VertexId tail(ArcId a) const { return arc(a).tail; }
  VertexId head(ArcId a) const { return arc(a).head; }
  std::span<const Arc> arcs() const { return arcs_; }

  /// Outgoing / incoming arc ids of `v`, ascending.
  std::span<const ArcId> out_arcs(VertexId v) const;
  std::span<const ArcId> in_arcs(VertexId v) const;

  /// Smallest-id arc from `u` to `v`, if any.
  std::optional<ArcId> find_arc(VertexId u, VertexId v) const;

  bool valid_vertex(VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < vertex_count();
  }
  bool valid_arc(ArcId a) const {
    return a >= 0 && static_cast<std::size_t>(a) < arc_count();
  }

  void check_vertex(VertexId v) const;
  void check_arc_set(const ArcSet& s) const;
  void check_vertex_set(const VertexSet& s) const;

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

/// G[X] with vertices relabelled 0..|X|-1 in ascending original order.
struct InducedSubgraph {
  Digraph graph;
  std::vector<VertexId> vertex_to_original;
  std::vector<VertexId> original_to_vertex;  // kNoVertex outside X
  std::vector<ArcId> arc_to_original;
  std::vector<ArcId> original_to_arc;  // kNoArc for dropped arcs
};

InducedSubgraph induced_subgraph(const Digraph& g, const VertexSet& x);

/// Result of identifying a vertex set into one vertex.
struct Contraction {
  Digraph graph;
  VertexId merged = kNoVertex;
  std::vector<VertexId> vertex_map;  // old -> new
  std::vector<ArcId> arc_to_original;
  std::vector<ArcId> original_to_arc;  // kNoArc for arcs inside the set
};

/// Merges `r_set` into a single vertex. Arcs with both ends in `r_set` are
/// dropped; arcs that become parallel keep distinct ids. The merged vertex
/// takes the position of the smallest member of `r_set`, other vertices keep
/// their relative order.
Contraction contract(const Digraph& g, const VertexSet& r_set);

/// Vertices reachable from `v` (including `v`), breadth-first.
VertexSet reachable_set(const Digraph& g, VertexId v);

bool has_directed_path(const Digraph& g, VertexId u, VertexId v);

/// Arcs of a shortest directed u->v path in traversal order; empty when u == v.
std::optional<std::vector<ArcId>> directed_path(const Digraph& g, VertexId u,
                                                VertexId v);

/// Breadth-first search from `root` that never enters vertices flagged in
/// `blocked` and stops once `arc_limit` tree arcs have been discovered.
/// Out-arcs are scanned in ascending id order. Returns the tree arcs in
/// discovery order.
std::vector<ArcId> bfs_arcs(const Digraph& g, VertexId root,
                            std::size_t arc_limit,
                            std::span<const char> blocked = {});

/// A `w`-rooted directed tree with exactly `size` arcs: the first `size` arcs
/// of a breadth-first arborescence. Absent when fewer than size+1 vertices
/// are reachable from `w`.
std::optional<ArcSet> bfs_tree(const Digraph& g, VertexId w, std::size_t size);

}  // namespace reconf

#endif  // RECONF_DIGRAPH_HPP
