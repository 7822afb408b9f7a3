#include "reconf/families.hpp"

#include <numeric>

namespace reconf {

namespace {

void set_reason(std::string* why, std::string reason) {
  if (why != nullptr) *why = std::move(reason);
}

// Weak components of the arcs in `s` via union-find over vertex ids.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  VertexId find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace

TreeView TreeView::bare(const Digraph& g, VertexId root) {
  g.check_vertex(root);
  TreeView t;
  t.root_ = root;
  t.parent_.assign(g.vertex_count(), kNoArc);
  t.parent_tail_.assign(g.vertex_count(), kNoVertex);
  t.children_.assign(g.vertex_count(), {});
  t.order_ = {root};
  return t;
}

bool TreeView::contains_vertex(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= parent_.size()) return false;
  return v == root_ || parent_[v] != kNoArc;
}

ArcId TreeView::parent_arc(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= parent_.size()) return kNoArc;
  return parent_[v];
}

std::vector<ArcId> TreeView::child_arcs(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= children_.size()) return {};
  return children_[v];
}

std::vector<ArcId> TreeView::arcs_top_down() const { return top_down_; }

std::vector<ArcId> TreeView::path_from_root(VertexId v) const {
  std::vector<ArcId> path;
  if (!contains_vertex(v)) return path;
  for (VertexId x = v; x != root_; x = parent_tail_[x]) path.push_back(parent_[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<TreeView> as_directed_tree(const Digraph& g, const ArcSet& s,
                                         std::string* why) {
  if (s.empty()) {
    set_reason(why, "empty arc set has no identifiable root");
    return std::nullopt;
  }
  g.check_arc_set(s);
  const std::size_t n = g.vertex_count();
  TreeView t;
  t.parent_.assign(n, kNoArc);
  t.parent_tail_.assign(n, kNoVertex);
  t.children_.assign(n, {});
  std::vector<char> touched(n, 0);
  std::size_t vertex_total = 0;
  for (ArcId a : s) {
    const Arc& arc = g.arc(a);
    if (t.parent_[arc.head] != kNoArc) {
      set_reason(why, "vertex " + std::to_string(arc.head) +
                          " has in-degree 2 or more");
      return std::nullopt;
    }
    t.parent_[arc.head] = a;
    t.parent_tail_[arc.head] = arc.tail;
    t.children_[arc.tail].push_back(a);
    for (VertexId v : {arc.tail, arc.head}) {
      if (!touched[v]) {
        touched[v] = 1;
        ++vertex_total;
      }
    }
  }
  if (vertex_total > s.size() + 1) {
    set_reason(why, "underlying graph is disconnected");
    return std::nullopt;
  }
  if (vertex_total < s.size() + 1) {
    set_reason(why, "underlying graph has a cycle");
    return std::nullopt;
  }
  // In-degrees are at most one and |V| = |A| + 1, so exactly one root exists.
  for (std::size_t v = 0; v < n; ++v) {
    if (touched[v] && t.parent_[v] == kNoArc) {
      t.root_ = static_cast<VertexId>(v);
      break;
    }
  }
  t.order_.push_back(t.root_);
  for (std::size_t i = 0; i < t.order_.size(); ++i) {
    for (ArcId a : t.children_[t.order_[i]]) {
      t.top_down_.push_back(a);
      t.order_.push_back(g.head(a));
    }
  }
  if (t.order_.size() != vertex_total) {
    set_reason(why, "underlying graph is disconnected");
    return std::nullopt;
  }
  t.arcs_ = s;
  return t;
}

int ForestView::component_of(VertexId v) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].contains_vertex(v)) return static_cast<int>(i);
  }
  return -1;
}

std::optional<ForestView> as_directed_forest(const Digraph& g, const ArcSet& s,
                                             std::string* why) {
  g.check_arc_set(s);
  const std::size_t n = g.vertex_count();
  std::vector<char> has_parent(n, 0);
  DisjointSets sets(n);
  for (ArcId a : s) {
    const Arc& arc = g.arc(a);
    if (has_parent[arc.head]) {
      set_reason(why, "vertex " + std::to_string(arc.head) +
                          " has in-degree 2 or more");
      return std::nullopt;
    }
    has_parent[arc.head] = 1;
    if (!sets.unite(arc.tail, arc.head)) {
      set_reason(why, "underlying graph has a cycle");
      return std::nullopt;
    }
  }
  std::vector<std::vector<ArcId>> by_component(n);
  for (ArcId a : s) by_component[sets.find(g.tail(a))].push_back(a);
  ForestView f;
  f.arcs = s;
  std::vector<VertexId> roots;
  for (auto& arcs : by_component) {
    if (arcs.empty()) continue;
    auto tree = as_directed_tree(g, ArcSet(std::move(arcs)), why);
    if (!tree) return std::nullopt;
    roots.push_back(tree->root());
    f.components.push_back(std::move(*tree));
  }
  std::sort(f.components.begin(), f.components.end(),
            [](const TreeView& a, const TreeView& b) { return a.root() < b.root(); });
  f.roots = VertexSet(std::move(roots));
  return f;
}

std::optional<PathView> as_directed_path(const Digraph& g, const ArcSet& s,
                                         std::string* why) {
  auto tree = as_directed_tree(g, s, why);
  if (!tree) return std::nullopt;
  if (leaf_arcs(*tree).size() > 1) {
    set_reason(why, "more than one leaf arc");
    return std::nullopt;
  }
  PathView p;
  p.arcs = s;
  p.vertices = tree->vertices();
  return p;
}

TreeView validate_directed_tree(const Digraph& g, const ArcSet& s) {
  std::string why;
  auto t = as_directed_tree(g, s, &why);
  if (!t) throw InvalidStructure("not a directed tree " + to_string(s) + ": " + why);
  return std::move(*t);
}

ForestView validate_directed_forest(const Digraph& g, const ArcSet& s) {
  std::string why;
  auto f = as_directed_forest(g, s, &why);
  if (!f) throw InvalidStructure("not a directed forest " + to_string(s) + ": " + why);
  return std::move(*f);
}

PathView validate_directed_path(const Digraph& g, const ArcSet& s) {
  std::string why;
  auto p = as_directed_path(g, s, &why);
  if (!p) throw InvalidStructure("not a directed path " + to_string(s) + ": " + why);
  return std::move(*p);
}

std::vector<ArcId> leaf_arcs(const TreeView& t) {
  std::vector<ArcId> leaves;
  for (VertexId v : t.vertices()) {
    if (v == t.root()) continue;
    if (t.child_arcs(v).empty()) leaves.push_back(t.parent_arc(v));
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

namespace {

bool acyclic_over(const Digraph& g, const std::vector<char>& use) {
  const std::size_t n = g.vertex_count();
  std::vector<int> indegree(n, 0);
  std::size_t used = 0;
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    if (use[a]) {
      ++indegree[g.arcs()[a].head];
      ++used;
    }
  }
  std::vector<VertexId> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) stack.push_back(static_cast<VertexId>(v));
  }
  std::size_t removed = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : g.out_arcs(v)) {
      if (!use[a]) continue;
      ++removed;
      if (--indegree[g.head(a)] == 0) stack.push_back(g.head(a));
    }
  }
  return removed == used;
}

}  // namespace

bool is_acyclic(const Digraph& g, const ArcSet& s) {
  g.check_arc_set(s);
  std::vector<char> use(g.arc_count(), 0);
  for (ArcId a : s) use[a] = 1;
  return acyclic_over(g, use);
}

bool is_acyclic_without(const Digraph& g, const ArcSet& removed) {
  g.check_arc_set(removed);
  std::vector<char> use(g.arc_count(), 1);
  for (ArcId a : removed) use[a] = 0;
  return acyclic_over(g, use);
}

bool is_spanning_tree(const Digraph& g, const ArcSet& s) {
  if (s.size() + 1 != g.vertex_count()) return false;
  if (s.empty()) return g.vertex_count() == 1;
  return as_directed_tree(g, s).has_value();
}

bool is_rooted_forest(const Digraph& g, const ArcSet& s, const VertexSet& roots) {
  auto f = as_directed_forest(g, s);
  if (!f) return false;
  for (ArcId a : s) {
    if (roots.contains(g.head(a))) return false;
  }
  for (VertexId r : f->roots) {
    if (!roots.contains(r)) return false;
  }
  return true;
}

}  // namespace reconf
