#include "reconf/reachability.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "reconf/rooted.hpp"

namespace reconf {

namespace {

std::vector<ArcId> full_bfs_parents(const Digraph& g, VertexId root) {
  std::vector<ArcId> parent(g.vertex_count(), kNoArc);
  std::vector<char> seen(g.vertex_count(), 0);
  seen[root] = 1;
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (ArcId a : g.out_arcs(v)) {
      VertexId w = g.head(a);
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = a;
      queue.push_back(w);
    }
  }
  return parent;
}

// A (k-1)-arc tree rooted at w in G - {u, v}.
std::optional<ArcSet> subtree_avoiding(const Digraph& g, VertexId w, VertexId u,
                                       VertexId v, std::size_t size,
                                       std::vector<char>& blocked) {
  blocked[u] = 1;
  blocked[v] = 1;
  auto arcs = bfs_arcs(g, w, size, blocked);
  blocked[u] = 0;
  blocked[v] = 0;
  if (arcs.size() < size) return std::nullopt;
  return ArcSet(std::move(arcs));
}

}  // namespace

AuxiliaryGraph::AuxiliaryGraph(const Digraph& g, std::size_t k)
    : k_(k), node_index_(g.vertex_count(), -1) {
  if (k < 2) {
    throw InvalidInput("auxiliary graph needs k >= 2, got " + std::to_string(k));
  }
  const std::size_t n = g.vertex_count();
  arc_tails_.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) arc_tails_.push_back(a.tail);

  for (std::size_t v = 0; v < n; ++v) {
    if (bfs_arcs(g, static_cast<VertexId>(v), k).size() == k) {
      node_index_[v] = static_cast<int>(nodes_.size());
      nodes_.push_back(static_cast<VertexId>(v));
    }
  }
  parents_.reserve(nodes_.size());
  for (VertexId v : nodes_) parents_.push_back(full_bfs_parents(g, v));
  adjacency_.assign(nodes_.size(), {});

  auto add_edge = [&](VertexId a, VertexId b, EdgeLabel label) {
    edge_lookup_.emplace(key(a, b), edges_.size());
    edges_.push_back({a, b, std::move(label)});
    adjacency_[node_index_[a]].push_back(b);
    adjacency_[node_index_[b]].push_back(a);
  };

  auto reaches = [&](VertexId from, VertexId to) {
    return parents_[node_index_[from]][to] != kNoArc;
  };
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      VertexId a = nodes_[i];
      VertexId b = nodes_[j];
      if (reaches(a, b)) {
        add_edge(a, b, PathCondition{a, b});
      } else if (reaches(b, a)) {
        add_edge(a, b, PathCondition{b, a});
      }
    }
  }

  // Common out-neighbours, smallest w first; only pairs still non-adjacent
  // are tested.
  std::vector<char> blocked(n, 0);
  std::vector<VertexId> tails;
  for (std::size_t w = 0; w < n; ++w) {
    tails.clear();
    for (ArcId a : g.in_arcs(static_cast<VertexId>(w))) {
      VertexId t = g.tail(a);
      if (node_index_[t] >= 0) tails.push_back(t);
    }
    std::sort(tails.begin(), tails.end());
    tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
    for (std::size_t i = 0; i < tails.size(); ++i) {
      for (std::size_t j = i + 1; j < tails.size(); ++j) {
        VertexId a = tails[i];
        VertexId b = tails[j];
        if (edge_lookup_.count(key(a, b)) != 0) continue;
        auto sub = subtree_avoiding(g, static_cast<VertexId>(w), a, b, k - 1,
                                    blocked);
        if (sub) {
          add_edge(a, b, CommonOutNeighbor{static_cast<VertexId>(w), std::move(*sub)});
        }
      }
    }
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  component_.assign(nodes_.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < nodes_.size(); ++s) {
    if (component_[s] != -1) continue;
    component_[s] = next;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (VertexId y : adjacency_[x]) {
        auto yi = static_cast<std::size_t>(node_index_[y]);
        if (component_[yi] == -1) {
          component_[yi] = next;
          stack.push_back(yi);
        }
      }
    }
    ++next;
  }
}

std::uint64_t AuxiliaryGraph::key(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

bool AuxiliaryGraph::is_node(VertexId v) const {
  return v >= 0 && static_cast<std::size_t>(v) < node_index_.size() &&
         node_index_[v] >= 0;
}

const AuxEdge* AuxiliaryGraph::edge(VertexId a, VertexId b) const {
  auto it = edge_lookup_.find(key(a, b));
  return it == edge_lookup_.end() ? nullptr : &edges_[it->second];
}

const std::vector<VertexId>& AuxiliaryGraph::neighbors(VertexId v) const {
  if (!is_node(v)) throw InvalidInput(std::to_string(v) + " is not an auxiliary node");
  return adjacency_[node_index_[v]];
}

std::optional<std::vector<VertexId>> AuxiliaryGraph::shortest_path(
    VertexId from, VertexId to) const {
  if (!is_node(from) || !is_node(to)) return std::nullopt;
  std::vector<VertexId> previous(node_index_.size(), kNoVertex);
  std::vector<char> seen(node_index_.size(), 0);
  std::deque<VertexId> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (VertexId y : adjacency_[node_index_[x]]) {
      if (seen[y]) continue;
      seen[y] = 1;
      previous[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<VertexId> walk;
  for (VertexId x = to; x != kNoVertex; x = previous[x]) walk.push_back(x);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

bool AuxiliaryGraph::connected(VertexId a, VertexId b) const {
  if (!is_node(a) || !is_node(b)) return false;
  return component_[node_index_[a]] == component_[node_index_[b]];
}

std::vector<ArcId> AuxiliaryGraph::witness_path(const PathCondition& c) const {
  if (!is_node(c.from)) throw InvalidInput("witness_path: source is not a node");
  const auto& parent = parents_[node_index_[c.from]];
  std::vector<ArcId> path;
  for (VertexId x = c.to; x != c.from; x = arc_tails_[parent[x]]) {
    if (parent[x] == kNoArc) throw InvalidInput("witness_path: no such path");
    path.push_back(parent[x]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool root_tree_exists(const Digraph& g, VertexId v, std::size_t k) {
  return bfs_arcs(g, v, k).size() == k;
}

std::optional<EdgeLabel> roots_adjacent(const Digraph& g, VertexId u, VertexId v,
                                        std::size_t k) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw InvalidInput("roots_adjacent: u == v");
  if (k < 1) throw InvalidInput("roots_adjacent: k must be positive");
  if (!root_tree_exists(g, u, k) || !root_tree_exists(g, v, k)) {
    throw InvalidInput("roots_adjacent: both vertices must root a k-arc tree");
  }
  if (has_directed_path(g, u, v)) return PathCondition{u, v};
  if (has_directed_path(g, v, u)) return PathCondition{v, u};
  std::vector<VertexId> common;
  for (ArcId a : g.out_arcs(u)) {
    VertexId w = g.head(a);
    if (g.find_arc(v, w)) common.push_back(w);
  }
  std::sort(common.begin(), common.end());
  common.erase(std::unique(common.begin(), common.end()), common.end());
  std::vector<char> blocked(g.vertex_count(), 0);
  for (VertexId w : common) {
    if (auto sub = subtree_avoiding(g, w, u, v, k - 1, blocked)) {
      return CommonOutNeighbor{w, std::move(*sub)};
    }
  }
  return std::nullopt;
}

AuxiliaryGraph build_auxiliary_graph(const Digraph& g, std::size_t k) {
  return AuxiliaryGraph(g, k);
}

namespace {

void check_pair(const Digraph& g, const TreeView& s, const TreeView& t) {
  if (s.size() != t.size()) {
    throw InvalidInput("trees differ in size (" + std::to_string(s.size()) +
                       " vs " + std::to_string(t.size()) + ")");
  }
  if (s.host_vertex_count() != g.vertex_count() ||
      t.host_vertex_count() != g.vertex_count()) {
    throw InvalidInput("tree does not belong to this graph");
  }
  g.check_arc_set(s.arcs());
  g.check_arc_set(t.arcs());
}

}  // namespace

bool decide(const Digraph& g, const TreeView& t_source, const TreeView& t_target) {
  check_pair(g, t_source, t_target);
  const std::size_t k = t_source.size();
  if (k == 0) return t_source.root() == t_target.root();
  if (k == 1 || t_source.root() == t_target.root()) return true;
  return AuxiliaryGraph(g, k).connected(t_source.root(), t_target.root());
}

bool decide(const AuxiliaryGraph& aux, const TreeView& t_source,
            const TreeView& t_target) {
  if (t_source.size() != aux.k() || t_target.size() != aux.k()) {
    throw InvalidInput("tree size differs from the auxiliary graph's k");
  }
  if (t_source.root() == t_target.root()) return true;
  return aux.connected(t_source.root(), t_target.root());
}

ReconfigSequence adjacent_root_step(const Digraph& g, const TreeView& t, ArcId arc) {
  const Arc& a = g.arc(arc);
  const std::size_t k = t.size();
  if (k == 0) throw InvalidInput("adjacent_root_step: tree has no arcs");
  const VertexId root = t.root();

  if (a.head == root) {
    // Reverse arc (v, root): hang the tree below v.
    const VertexId v = a.tail;
    ArcId drop = t.contains_vertex(v) ? t.parent_arc(v) : leaf_arcs(t).front();
    TreeView pivot = validate_directed_tree(g, t.arcs().exchanged(drop, arc));
    return {{t.arcs(), pivot.arcs()}};
  }
  if (a.tail != root) {
    throw InvalidInput("adjacent_root_step: arc " + std::to_string(arc) +
                       " does not touch the root " + std::to_string(root));
  }

  // Forward arc (root, v): pick a v-rooted tree, preferably avoiding root.
  const VertexId v = a.head;
  std::vector<char> blocked(g.vertex_count(), 0);
  blocked[root] = 1;
  auto avoiding = bfs_arcs(g, v, k, blocked);
  ArcSet target_arcs;
  ArcSet pivot_arcs;
  if (avoiding.size() == k) {
    target_arcs = ArcSet(std::move(avoiding));
    TreeView other = validate_directed_tree(g, target_arcs);
    pivot_arcs = target_arcs.exchanged(leaf_arcs(other).front(), arc);
  } else {
    auto tree = bfs_tree(g, v, k);
    if (!tree) {
      throw InvalidInput("adjacent_root_step: vertex " + std::to_string(v) +
                         " roots no tree of size " + std::to_string(k));
    }
    target_arcs = std::move(*tree);
    // Every k-arc v-tree must use root here; closing the cycle through the
    // arc and cutting the cycle arc into root yields a root-rooted tree.
    TreeView other = validate_directed_tree(g, target_arcs);
    if (!other.contains_vertex(root)) throw std::logic_error("v-tree avoids root");
    pivot_arcs = target_arcs.exchanged(other.parent_arc(root), arc);
  }
  TreeView pivot = validate_directed_tree(g, pivot_arcs);
  ReconfigSequence seq = fixed_root_sequence(g, t, pivot);
  seq.steps.push_back(target_arcs);
  return seq;
}

std::size_t sequence_length_guard(const Digraph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  return 4 * n * n * k;
}

ReconfigSequence build_sequence(const Digraph& g, const TreeView& t_source,
                                const TreeView& t_target) {
  check_pair(g, t_source, t_target);
  const std::size_t k = t_source.size();
  if (k >= 2 && t_source.root() != t_target.root()) {
    return build_sequence(g, AuxiliaryGraph(g, k), t_source, t_target);
  }
  if (k == 0) {
    if (t_source.root() != t_target.root()) {
      throw InvalidInput("build_sequence: bare roots differ, no sequence exists");
    }
    return {{t_source.arcs()}};
  }
  if (k == 1) {
    if (t_source.arcs() == t_target.arcs()) return {{t_source.arcs()}};
    return {{t_source.arcs(), t_target.arcs()}};
  }
  return fixed_root_sequence(g, t_source, t_target);
}

ReconfigSequence build_sequence(const Digraph& g, const AuxiliaryGraph& aux,
                                const TreeView& t_source,
                                const TreeView& t_target) {
  check_pair(g, t_source, t_target);
  const std::size_t k = t_source.size();
  if (k != aux.k()) throw InvalidInput("tree size differs from the auxiliary graph's k");
  if (t_source.root() == t_target.root()) {
    return fixed_root_sequence(g, t_source, t_target);
  }
  auto walk = aux.shortest_path(t_source.root(), t_target.root());
  if (!walk) {
    throw InvalidInput("build_sequence: roots " + std::to_string(t_source.root()) +
                       " and " + std::to_string(t_target.root()) +
                       " are not connected; no sequence exists");
  }

  ReconfigSequence seq{{t_source.arcs()}};
  TreeView current = t_source;
  auto advance = [&](const ReconfigSequence& part) {
    seq.append(part);
    current = validate_directed_tree(g, seq.back());
  };
  for (std::size_t i = 0; i + 1 < walk->size(); ++i) {
    const VertexId x = (*walk)[i];
    const VertexId y = (*walk)[i + 1];
    const AuxEdge* e = aux.edge(x, y);
    if (e == nullptr) throw std::logic_error("walk uses a missing edge");

    if (const auto* cond = std::get_if<PathCondition>(&e->label)) {
      std::vector<ArcId> arcs = aux.witness_path(*cond);
      if (cond->from == y) std::reverse(arcs.begin(), arcs.end());
      for (ArcId a : arcs) advance(adjacent_root_step(g, current, a));
    } else {
      const auto& common = std::get<CommonOutNeighbor>(e->label);
      ArcSet from_x = common.subtree;
      from_x.insert(*g.find_arc(x, common.w));
      ArcSet from_y = common.subtree;
      from_y.insert(*g.find_arc(y, common.w));
      advance(fixed_root_sequence(g, current, validate_directed_tree(g, from_x)));
      advance(ReconfigSequence{{from_x, from_y}});
    }
    if (current.root() != y) throw std::logic_error("edge replay missed its root");
  }
  advance(fixed_root_sequence(g, current, t_target));

  ReconfigSequence out = compress(seq);
  if (out.length() > sequence_length_guard(g, k)) {
    throw std::logic_error("sequence length " + std::to_string(out.length()) +
                           " exceeds 4|V|^2 k");
  }
  return out;
}

}  // namespace reconf
