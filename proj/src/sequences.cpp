#include "reconf/sequences.hpp"

#include <unordered_map>

namespace reconf {

void ReconfigSequence::append(const ReconfigSequence& other) {
  auto first = other.steps.begin();
  if (!steps.empty() && first != other.steps.end() && *first == steps.back()) {
    ++first;
  }
  steps.insert(steps.end(), first, other.steps.end());
}

ReconfigSequence ReconfigSequence::reversed() const {
  return {std::vector<IdSet>(steps.rbegin(), steps.rend())};
}

SequenceVerdict validate_sequence(const FamilyPredicate& family,
                                  const ReconfigSequence& seq,
                                  const IdSet& source, const IdSet& target) {
  auto fail = [](std::size_t i, std::string reason) {
    return SequenceVerdict{false, i, std::move(reason)};
  };
  if (seq.steps.empty()) return fail(0, "empty sequence");
  if (seq.front() != source) return fail(0, "does not start at the source");
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const IdSet& step = seq.steps[i];
    if (step.size() != source.size()) {
      return fail(i, "size " + std::to_string(step.size()) + " differs from " +
                         std::to_string(source.size()));
    }
    if (!family(step)) return fail(i, "not a family member: " + to_string(step));
    if (i > 0 && !single_exchange(seq.steps[i - 1], step)) {
      return fail(i, "not a single exchange from the previous step");
    }
  }
  if (seq.back() != target) {
    return fail(seq.steps.size() - 1, "does not end at the target");
  }
  return {};
}

ReconfigSequence compress(const ReconfigSequence& seq) {
  ReconfigSequence out;
  std::unordered_map<IdSet, std::size_t, IdSetHash> position;
  for (const IdSet& step : seq.steps) {
    auto it = position.find(step);
    if (it != position.end()) {
      for (std::size_t i = it->second + 1; i < out.steps.size(); ++i) {
        position.erase(out.steps[i]);
      }
      out.steps.resize(it->second + 1);
      continue;
    }
    position.emplace(step, out.steps.size());
    out.steps.push_back(step);
  }
  return out;
}

}  // namespace reconf
