#ifndef RECONF_ROOTED_HPP
#define RECONF_ROOTED_HPP

#include "reconf/digraph.hpp"
#include "reconf/families.hpp"
#include "reconf/sequences.hpp"

namespace reconf {

/// An arc of `t` is fixed when the whole root path to its head also belongs
/// to `t_target`.
struct FixedPartition {
  ArcSet fixed;
  ArcSet unfixed;
};

FixedPartition fixed_arc_partition(const Digraph& g, const TreeView& t,
                                   const TreeView& t_target);

/// Reconfigures between two equal-size trees sharing root r without ever
/// moving the root. Each step fixes at least one more arc, so the length is
/// at most the number of unfixed arcs of the source (hence at most k).
ReconfigSequence fixed_root_sequence(const Digraph& g, const TreeView& t_source,
                                     const TreeView& t_target);

/// Same for forests with a common root set: the roots are identified into a
/// single vertex, the fixed-root construction runs there, and arcs are mapped
/// back. Every step is a forest whose roots lie in `roots`.
ReconfigSequence rooted_forest_sequence(const Digraph& g, const ArcSet& f_source,
                                        const ArcSet& f_target,
                                        const VertexSet& roots);

}  // namespace reconf

#endif  // RECONF_ROOTED_HPP
