#ifndef RECONF_PATHRECONF_HPP
#define RECONF_PATHRECONF_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "reconf/digraph.hpp"
#include "reconf/errors.hpp"
#include "reconf/sequences.hpp"

namespace reconf {

/// A directed path as its vertex sequence v_1 .. v_k (k >= 2). Parallel arcs
/// are not distinguished: a path is determined by its vertices.
using PathState = std::vector<VertexId>;

enum class PathMode {
  kSliding,          // whole path advances or retreats by one vertex
  kReconfiguration,  // any single arc exchange
};

/// Throws InvalidStructure unless `p` is a simple directed path of g with at
/// least two vertices.
void check_path(const Digraph& g, const PathState& p);

/// Arc ids of the path, smallest id per consecutive vertex pair.
ArcSet path_arcs(const Digraph& g, const PathState& p);

/// Neighbouring paths, sorted and deduplicated.
///
/// Sliding: (v_2..v_k, v) and (v, v_1..v_{k-1}).
/// Reconfiguration: sliding, turning ((v_1..v_{k-1}, v) and (v, v_2..v_k)
/// for fresh v) and shifting (rotations when (v_k, v_1) is an arc). A
/// single-arc path can also jump to any other arc, since every arc is a
/// path one exchange away.
std::vector<PathState> path_neighbors(const Digraph& g, const PathState& p,
                                      PathMode mode);

/// Breadth-first search over paths; a shortest sequence of states or absent.
/// Throws GuardExceeded once more than `state_guard` states are discovered.
std::optional<std::vector<PathState>> solve_path(
    const Digraph& g, const PathState& source, const PathState& target,
    PathMode mode, std::size_t state_guard = kDefaultStateGuard);

/// Every path reachable from `source` (including it), in discovery order.
std::vector<PathState> reachable_paths(const Digraph& g, const PathState& source,
                                       PathMode mode,
                                       std::size_t state_guard = kDefaultStateGuard);

/// Path states as arc sets, for validate_sequence.
ReconfigSequence to_arc_sequence(const Digraph& g,
                                 const std::vector<PathState>& states);

/// Transformed instance plus correspondence maps.
struct PathReduction {
  enum class Kind { kPendant, kSubdivision };

  Kind kind = Kind::kPendant;
  Digraph graph;
  std::vector<VertexId> vertex_map;  // original vertex -> new vertex
  std::vector<ArcId> arc_map;        // original arc -> first new arc
  PathState source;
  PathState target;
  std::size_t original_vertex_count = 0;
  std::vector<Arc> original_arcs;

  /// Maps a path of the original graph into the transformed graph.
  PathState map_path(const PathState& p) const;
};

/// Adds pendant vertices v_in (n + 2v) and v_out (n + 2v + 1) with arcs
/// (v_in, v) and (v, v_out) for every vertex. Reconfiguration in g is
/// equivalent to sliding in the result.
PathReduction reduce_reconf_to_slide(const Digraph& g, const PathState& source,
                                     const PathState& target);

/// Subdivides every arc e = (u, w) with a vertex n + e, giving arcs
/// (u, n + e) = 2e and (n + e, w) = 2e + 1. Sliding in g is equivalent to
/// reconfiguration in the result.
PathReduction reduce_slide_to_reconf(const Digraph& g, const PathState& source,
                                     const PathState& target);

/// A path of the subdivided graph is standard when both ends are original
/// vertices.
bool is_standard_path(const PathReduction& r, const PathState& p);

}  // namespace reconf

#endif  // RECONF_PATHRECONF_HPP
