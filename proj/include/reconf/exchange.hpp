#ifndef RECONF_EXCHANGE_HPP
#define RECONF_EXCHANGE_HPP

#include "reconf/digraph.hpp"
#include "reconf/families.hpp"
#include "reconf/sequences.hpp"

namespace reconf {

/// One exchange: drop `remove` (in current, not in target) and insert `add`
/// (in target, not in current).
struct ExchangePair {
  ArcId remove = kNoArc;
  ArcId add = kNoArc;

  friend bool operator==(const ExchangePair&, const ExchangePair&) = default;
};

inline ArcSet apply(const ArcSet& s, const ExchangePair& p) {
  return s.exchanged(p.remove, p.add);
}

/// An exchange moving spanning tree `t` one arc closer to `t_target` while
/// staying a spanning tree.
///
/// With a common root r the added arc is the first arc of `t_target`, in
/// breadth-first order from r, that `t` lacks; the removed arc is the `t` arc
/// into its head. With different roots the added arc is the `t_target` arc
/// entering r = root(t), and the removed arc is the first arc on the `t` path
/// from r to that arc's tail which `t_target` lacks; the result is rooted at
/// the removed arc's head.
ExchangePair spanning_tree_exchange_step(const Digraph& g, const TreeView& t,
                                         const TreeView& t_target);

/// Spanning-tree sequence of length exactly |source \ target|.
ReconfigSequence shortest_spanning_sequence(const Digraph& g,
                                            const TreeView& t_source,
                                            const TreeView& t_target);

/// An exchange moving forest `f` one arc closer to the equal-size forest
/// `f_target` while staying a forest.
ExchangePair forest_exchange_step(const Digraph& g, const ForestView& f,
                                  const ForestView& f_target);

/// Forest sequence of length exactly |source \ target|.
ReconfigSequence shortest_forest_sequence(const Digraph& g,
                                          const ForestView& f_source,
                                          const ForestView& f_target);

}  // namespace reconf

#endif  // RECONF_EXCHANGE_HPP
