#ifndef RECONF_SEQUENCES_HPP
#define RECONF_SEQUENCES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reconf/id_set.hpp"

namespace reconf {

/// Membership test for a solution family; closes over its host graph.
using FamilyPredicate = std::function<bool(const IdSet&)>;

/// Ordered states H_0 .. H_l; consecutive states differ by one exchange.
struct ReconfigSequence {
  std::vector<IdSet> steps;

  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
  const IdSet& front() const { return steps.front(); }
  const IdSet& back() const { return steps.back(); }

  /// Appends `other`, skipping its first state when it equals our last.
  void append(const ReconfigSequence& other);
  ReconfigSequence reversed() const;

  friend bool operator==(const ReconfigSequence&, const ReconfigSequence&) = default;
};

struct SequenceVerdict {
  bool valid = true;
  std::optional<std::size_t> index;  // first offending step
  std::string reason;

  explicit operator bool() const { return valid; }
};

/// Checks endpoints, family membership of every step and that every
/// consecutive pair is a strict single exchange.
SequenceVerdict validate_sequence(const FamilyPredicate& family,
                                  const ReconfigSequence& seq,
                                  const IdSet& source, const IdSet& target);

/// Drops revisited states by splicing out the loop between two visits.
/// Endpoints are kept and every remaining neighbour pair was adjacent in the
/// input, so validity carries over.
ReconfigSequence compress(const ReconfigSequence& seq);

}  // namespace reconf

#endif  // RECONF_SEQUENCES_HPP
