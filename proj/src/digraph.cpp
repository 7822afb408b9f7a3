#include "reconf/digraph.hpp"

#include <cstdlib>
#include <deque>
#include <string>

namespace reconf {

std::size_t state_guard_from_env() {
  const char* raw = std::getenv("RECONF_STATE_GUARD");
  if (raw == nullptr || *raw == '\0') return kDefaultStateGuard;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw InvalidInput(std::string("RECONF_STATE_GUARD is not a positive "
                                   "integer: ") +
                       raw);
  }
  return static_cast<std::size_t>(value);
}

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs)
    : arcs_(std::move(arcs)), out_(vertex_count), in_(vertex_count) {
  for (std::size_t id = 0; id < arcs_.size(); ++id) {
    const Arc& a = arcs_[id];
    if (!valid_vertex(a.tail) || !valid_vertex(a.head)) {
      throw InvalidInput("arc " + std::to_string(id) + " (" +
                         std::to_string(a.tail) + "," +
                         std::to_string(a.head) + ") has an endpoint outside "
                         "0.." + std::to_string(vertex_count));
    }
    if (a.tail == a.head) {
      throw InvalidInput("arc " + std::to_string(id) + " is a self-loop at " +
                         std::to_string(a.tail));
    }
    out_[a.tail].push_back(static_cast<ArcId>(id));
    in_[a.head].push_back(static_cast<ArcId>(id));
  }
}

const Arc& Digraph::arc(ArcId a) const {
  if (!valid_arc(a)) throw InvalidInput("invalid arc id " + std::to_string(a));
  return arcs_[a];
}

std::span<const ArcId> Digraph::out_arcs(VertexId v) const {
  check_vertex(v);
  return out_[v];
}

std::span<const ArcId> Digraph::in_arcs(VertexId v) const {
  check_vertex(v);
  return in_[v];
}

std::optional<ArcId> Digraph::find_arc(VertexId u, VertexId v) const {
  for (ArcId a : out_arcs(u)) {
    if (arcs_[a].head == v) return a;
  }
  return std::nullopt;
}

void Digraph::check_vertex(VertexId v) const {
  if (!valid_vertex(v)) {
    throw InvalidInput("invalid vertex id " + std::to_string(v));
  }
}

void Digraph::check_arc_set(const ArcSet& s) const {
  for (ArcId a : s) {
    if (!valid_arc(a)) throw InvalidInput("invalid arc id " + std::to_string(a));
  }
}

void Digraph::check_vertex_set(const VertexSet& s) const {
  for (VertexId v : s) check_vertex(v);
}

InducedSubgraph induced_subgraph(const Digraph& g, const VertexSet& x) {
  g.check_vertex_set(x);
  InducedSubgraph sub;
  sub.original_to_vertex.assign(g.vertex_count(), kNoVertex);
  sub.original_to_arc.assign(g.arc_count(), kNoArc);
  for (VertexId v : x) {
    sub.original_to_vertex[v] = static_cast<VertexId>(sub.vertex_to_original.size());
    sub.vertex_to_original.push_back(v);
  }
  std::vector<Arc> arcs;
  for (std::size_t id = 0; id < g.arc_count(); ++id) {
    const Arc& a = g.arcs()[id];
    VertexId t = sub.original_to_vertex[a.tail];
    VertexId h = sub.original_to_vertex[a.head];
    if (t == kNoVertex || h == kNoVertex) continue;
    sub.original_to_arc[id] = static_cast<ArcId>(arcs.size());
    sub.arc_to_original.push_back(static_cast<ArcId>(id));
    arcs.push_back({t, h});
  }
  sub.graph = Digraph(x.size(), std::move(arcs));
  return sub;
}

Contraction contract(const Digraph& g, const VertexSet& r_set) {
  if (r_set.empty()) throw InvalidInput("contract: empty vertex set");
  g.check_vertex_set(r_set);
  Contraction c;
  c.vertex_map.assign(g.vertex_count(), kNoVertex);
  VertexId next = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (r_set.contains(static_cast<VertexId>(v))) {
      if (c.merged == kNoVertex) c.merged = next++;
      c.vertex_map[v] = c.merged;
    } else {
      c.vertex_map[v] = next++;
    }
  }
  c.original_to_arc.assign(g.arc_count(), kNoArc);
  std::vector<Arc> arcs;
  for (std::size_t id = 0; id < g.arc_count(); ++id) {
    const Arc& a = g.arcs()[id];
    if (r_set.contains(a.tail) && r_set.contains(a.head)) continue;
    c.original_to_arc[id] = static_cast<ArcId>(arcs.size());
    c.arc_to_original.push_back(static_cast<ArcId>(id));
    arcs.push_back({c.vertex_map[a.tail], c.vertex_map[a.head]});
  }
  c.graph = Digraph(static_cast<std::size_t>(next), std::move(arcs));
  return c;
}

namespace {

// Breadth-first traversal recording the discovering arc of every vertex.
std::vector<ArcId> bfs_parents(const Digraph& g, VertexId root,
                               std::vector<char>& seen) {
  std::vector<ArcId> parent(g.vertex_count(), kNoArc);
  seen.assign(g.vertex_count(), 0);
  std::deque<VertexId> queue{root};
  seen[root] = 1;
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

}  // namespace

VertexSet reachable_set(const Digraph& g, VertexId v) {
  g.check_vertex(v);
  std::vector<char> seen;
  bfs_parents(g, v, seen);
  std::vector<VertexId> out;
  for (std::size_t w = 0; w < seen.size(); ++w) {
    if (seen[w]) out.push_back(static_cast<VertexId>(w));
  }
  return VertexSet::from_sorted_unique(std::move(out));
}

bool has_directed_path(const Digraph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  return directed_path(g, u, v).has_value();
}

std::optional<std::vector<ArcId>> directed_path(const Digraph& g, VertexId u,
                                                VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  std::vector<char> seen;
  auto parent = bfs_parents(g, u, seen);
  if (!seen[v]) return std::nullopt;
  std::vector<ArcId> path;
  for (VertexId x = v; x != u; x = g.tail(parent[x])) path.push_back(parent[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<ArcId> bfs_arcs(const Digraph& g, VertexId root,
                            std::size_t arc_limit,
                            std::span<const char> blocked) {
  g.check_vertex(root);
  std::vector<ArcId> tree;
  if (arc_limit == 0) return tree;
  std::vector<char> seen(g.vertex_count(), 0);
  seen[root] = 1;
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (ArcId a : g.out_arcs(v)) {
      VertexId w = g.head(a);
      if (seen[w] || (!blocked.empty() && blocked[w])) continue;
      seen[w] = 1;
      tree.push_back(a);
      if (tree.size() == arc_limit) return tree;
      queue.push_back(w);
    }
  }
  return tree;
}

std::optional<ArcSet> bfs_tree(const Digraph& g, VertexId w, std::size_t size) {
  auto arcs = bfs_arcs(g, w, size);
  if (arcs.size() < size) return std::nullopt;
  return ArcSet(std::move(arcs));
}

}  // namespace reconf
