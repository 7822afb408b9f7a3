#ifndef RECONF_ORACLE_HPP
#define RECONF_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "reconf/digraph.hpp"
#include "reconf/errors.hpp"
#include "reconf/sequences.hpp"

namespace reconf {

/// A solution family given extensionally: all `k`-subsets of ids
/// 0..universe-1 accepted by `member`.
struct FamilySpec {
  std::string name;
  std::size_t universe = 0;
  std::size_t k = 0;
  FamilyPredicate member;
};

FamilySpec tree_family(const Digraph& g, std::size_t k);
FamilySpec rooted_tree_family(const Digraph& g, std::size_t k, VertexId root);
FamilySpec spanning_tree_family(const Digraph& g);
FamilySpec forest_family(const Digraph& g, std::size_t k);
FamilySpec rooted_forest_family(const Digraph& g, std::size_t k,
                                const VertexSet& roots);
FamilySpec path_family(const Digraph& g, std::size_t k);
FamilySpec feedback_vertex_family(const Digraph& g, std::size_t k);
FamilySpec feedback_arc_family(const Digraph& g, std::size_t k);
FamilySpec acyclic_family(const Digraph& g, std::size_t k);

/// All members in lexicographic order of their sorted encodings. Throws
/// GuardExceeded when C(universe, k) exceeds `guard`.
std::vector<IdSet> enumerate_family(const FamilySpec& spec,
                                    std::size_t guard = kDefaultStateGuard);

/// The reconfiguration graph of a family: members joined when they differ by
/// a single exchange.
class ReconfigurationGraph {
 public:
  explicit ReconfigurationGraph(const FamilySpec& spec,
                                std::size_t guard = kDefaultStateGuard);

  const std::vector<IdSet>& members() const { return members_; }
  std::optional<std::size_t> index_of(const IdSet& s) const;
  const std::vector<std::size_t>& neighbors(std::size_t i) const {
    return adjacency_[i];
  }
  std::size_t component(std::size_t i) const { return component_[i]; }

  bool reachable(const IdSet& source, const IdSet& target) const;
  std::optional<std::size_t> distance(const IdSet& source, const IdSet& target) const;
  /// Distances from one member to all others (absent entries = unreachable).
  std::vector<std::optional<std::size_t>> distances_from(std::size_t i) const;
  std::optional<ReconfigSequence> shortest_sequence(const IdSet& source,
                                                    const IdSet& target) const;

 private:
  std::size_t require(const IdSet& s) const;

  std::vector<IdSet> members_;
  std::unordered_map<IdSet, std::size_t, IdSetHash> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> component_;
};

bool oracle_decide(const FamilySpec& spec, const IdSet& source, const IdSet& target);
std::optional<std::size_t> oracle_distance(const FamilySpec& spec, const IdSet& source,
                                           const IdSet& target);

}  // namespace reconf

#endif  // RECONF_ORACLE_HPP
