// Frozen outputs of exhaustive searches. The search is replayed in
// test_reachability.cpp.
#ifndef RECONF_TESTS_FIXTURES_HPP
#define RECONF_TESTS_FIXTURES_HPP

#include <vector>

#include "reconf/digraph.hpp"

namespace fixtures {

struct TreePair {
  std::size_t vertices;
  std::vector<reconf::Arc> arcs;
  reconf::ArcSet source;
  reconf::ArcSet target;
};

// Fewest-arc digraph (4 vertices, then arc count, then mask
// order) holding two equal-size directed trees with different roots and no
// reconfiguration sequence: both 2-arc stars of the orientation {0,1} -> {2,3}.
inline const TreePair& no_instance() {
  static const TreePair pair{4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, reconf::ArcSet{0, 1},
                             reconf::ArcSet{2, 3}};
  return pair;
}

}  // namespace fixtures

#endif  // RECONF_TESTS_FIXTURES_HPP
