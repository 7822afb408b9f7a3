#include "reconf/oracle.hpp"

#include <deque>

#include "reconf/families.hpp"
#include "reconf/feedback.hpp"

namespace reconf {

FamilySpec tree_family(const Digraph& g, std::size_t k) {
  return {"tree", g.arc_count(), k,
          [&g](const IdSet& s) { return as_directed_tree(g, s).has_value(); }};
}

FamilySpec rooted_tree_family(const Digraph& g, std::size_t k, VertexId root) {
  return {"rooted-tree", g.arc_count(), k, [&g, root](const IdSet& s) {
            auto t = as_directed_tree(g, s);
            return t && t->root() == root;
          }};
}

FamilySpec spanning_tree_family(const Digraph& g) {
  const std::size_t k = g.vertex_count() == 0 ? 0 : g.vertex_count() - 1;
  return {"spanning-tree", g.arc_count(), k,
          [&g](const IdSet& s) { return is_spanning_tree(g, s); }};
}

FamilySpec forest_family(const Digraph& g, std::size_t k) {
  return {"forest", g.arc_count(), k,
          [&g](const IdSet& s) { return as_directed_forest(g, s).has_value(); }};
}

FamilySpec rooted_forest_family(const Digraph& g, std::size_t k,
                                const VertexSet& roots) {
  return {"rooted-forest", g.arc_count(), k,
          [&g, roots](const IdSet& s) { return is_rooted_forest(g, s, roots); }};
}

FamilySpec path_family(const Digraph& g, std::size_t k) {
  return {"path", g.arc_count(), k,
          [&g](const IdSet& s) { return as_directed_path(g, s).has_value(); }};
}

FamilySpec feedback_vertex_family(const Digraph& g, std::size_t k) {
  return {"feedback-vertex-set", g.vertex_count(), k,
          [&g](const IdSet& s) { return is_feedback_vertex_set(g, s); }};
}

FamilySpec feedback_arc_family(const Digraph& g, std::size_t k) {
  return {"feedback-arc-set", g.arc_count(), k,
          [&g](const IdSet& s) { return is_feedback_arc_set(g, s); }};
}

FamilySpec acyclic_family(const Digraph& g, std::size_t k) {
  return {"acyclic", g.arc_count(), k,
          [&g](const IdSet& s) { return is_acyclic(g, s); }};
}

namespace {

// C(n, k) saturating at `cap` + 1.
std::size_t bounded_binomial(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (value > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(value + 0.5L);
}

}  // namespace

std::vector<IdSet> enumerate_family(const FamilySpec& spec, std::size_t guard) {
  const std::size_t n = spec.universe;
  const std::size_t k = spec.k;
  if (bounded_binomial(n, k, guard) > guard) {
    throw GuardExceeded("enumerate_family: C(" + std::to_string(n) + "," +
                            std::to_string(k) + ") subsets",
                        guard);
  }
  std::vector<IdSet> out;
  if (k > n) return out;
  std::vector<std::int32_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<std::int32_t>(i);
  while (true) {
    IdSet candidate = IdSet::from_sorted_unique(pick);
    if (spec.member(candidate)) out.push_back(std::move(candidate));
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && static_cast<std::size_t>(pick[i - 1]) == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

ReconfigurationGraph::ReconfigurationGraph(const FamilySpec& spec, std::size_t guard)
    : members_(enumerate_family(spec, guard)) {
  for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
  adjacency_.assign(members_.size(), {});
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const IdSet& s = members_[i];
    for (auto out : s) {
      for (std::size_t in = 0; in < spec.universe; ++in) {
        const auto id = static_cast<std::int32_t>(in);
        if (s.contains(id)) continue;
        auto it = index_.find(s.exchanged(out, id));
        if (it != index_.end()) adjacency_[i].push_back(it->second);
      }
    }
    std::sort(adjacency_[i].begin(), adjacency_[i].end());
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  component_.assign(members_.size(), kUnset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < members_.size(); ++s) {
    if (component_[s] != kUnset) continue;
    component_[s] = next;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adjacency_[x]) {
        if (component_[y] == kUnset) {
          component_[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
}

std::optional<std::size_t> ReconfigurationGraph::index_of(const IdSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ReconfigurationGraph::require(const IdSet& s) const {
  auto i = index_of(s);
  if (!i) throw InvalidInput(to_string(s) + " is not a member of the family");
  return *i;
}

bool ReconfigurationGraph::reachable(const IdSet& source, const IdSet& target) const {
  return component_[require(source)] == component_[require(target)];
}

std::vector<std::optional<std::size_t>> ReconfigurationGraph::distances_from(
    std::size_t i) const {
  std::vector<std::optional<std::size_t>> dist(members_.size());
  dist[i] = 0;
  std::deque<std::size_t> queue{i};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adjacency_[x]) {
      if (dist[y]) continue;
      dist[y] = *dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

std::optional<std::size_t> ReconfigurationGraph::distance(const IdSet& source,
                                                          const IdSet& target) const {
  const std::size_t s = require(source);
  const std::size_t t = require(target);
  if (component_[s] != component_[t]) return std::nullopt;
  return distances_from(s)[t];
}

std::optional<ReconfigSequence> ReconfigurationGraph::shortest_sequence(
    const IdSet& source, const IdSet& target) const {
  const std::size_t s = require(source);
  const std::size_t t = require(target);
  if (component_[s] != component_[t]) return std::nullopt;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> previous(members_.size(), kUnset);
  previous[s] = s;
  std::deque<std::size_t> queue{s};
  while (!queue.empty() && previous[t] == kUnset) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adjacency_[x]) {
      if (previous[y] != kUnset) continue;
      previous[y] = x;
      queue.push_back(y);
    }
  }
  ReconfigSequence seq;
  for (std::size_t x = t;; x = previous[x]) {
    seq.steps.push_back(members_[x]);
    if (x == s) break;
  }
  std::reverse(seq.steps.begin(), seq.steps.end());
  return seq;
}

bool oracle_decide(const FamilySpec& spec, const IdSet& source, const IdSet& target) {
  return ReconfigurationGraph(spec).reachable(source, target);
}

std::optional<std::size_t> oracle_distance(const FamilySpec& spec, const IdSet& source,
                                           const IdSet& target) {
  return ReconfigurationGraph(spec).distance(source, target);
}

}  // namespace reconf
