// Independent reference implementations used only by the tests. They work
// from definitions with plain loops and share no code with the library
// beyond the Digraph container.
#ifndef RECONF_TESTS_NAIVE_HPP
#define RECONF_TESTS_NAIVE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "reconf/digraph.hpp"

namespace naive {

using reconf::ArcId;
using reconf::Digraph;
using reconf::VertexId;

using Ids = std::vector<int>;

inline std::set<int> reach(const Digraph& g, int v, const std::set<int>& removed = {}) {
  std::set<int> seen{v};
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      int t = g.arcs()[a].tail;
      int h = g.arcs()[a].head;
      if (t == x && !removed.count(h) && seen.insert(h).second) stack.push_back(h);
    }
  }
  return seen;
}

// Root of the arc set if it is an out-tree, by the textbook definition.
inline std::optional<int> tree_root(const Digraph& g, const Ids& arcs) {
  if (arcs.empty()) return std::nullopt;
  std::map<int, int> indeg;
  std::set<int> verts;
  for (int a : arcs) {
    verts.insert(g.arcs()[a].tail);
    verts.insert(g.arcs()[a].head);
    ++indeg[g.arcs()[a].head];
  }
  if (verts.size() != arcs.size() + 1) return std::nullopt;
  std::optional<int> root;
  for (int v : verts) {
    if (indeg[v] > 1) return std::nullopt;
    if (indeg[v] == 0) {
      if (root) return std::nullopt;
      root = v;
    }
  }
  if (!root) return std::nullopt;
  // every vertex reachable from the root along the set
  std::set<int> seen{*root};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : arcs) {
      if (seen.count(g.arcs()[a].tail) && seen.insert(g.arcs()[a].head).second) grew = true;
    }
  }
  if (seen.size() != verts.size()) return std::nullopt;
  return root;
}

inline bool is_forest(const Digraph& g, const Ids& arcs) {
  std::map<int, int> indeg;
  for (int a : arcs) {
    if (++indeg[g.arcs()[a].head] > 1) return false;
  }
  // in-degree <= 1 plus no directed cycle makes each component an out-tree
  std::map<int, int> parent;
  for (int a : arcs) parent[g.arcs()[a].head] = g.arcs()[a].tail;
  for (auto [v, p] : parent) {
    int x = p;
    for (std::size_t steps = 0; parent.count(x); ++steps) {
      if (x == v || steps > arcs.size()) return false;
      x = parent[x];
    }
  }
  return true;
}

inline bool acyclic_without_vertices(const Digraph& g, const std::set<int>& removed) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (removed.count(static_cast<int>(v))) continue;
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      const auto& arc = g.arcs()[a];
      if (arc.tail != static_cast<int>(v) || removed.count(arc.head)) continue;
      if (reach(g, arc.head, removed).count(static_cast<int>(v))) return false;
    }
  }
  return true;
}

inline std::vector<Ids> subsets(int universe, int k) {
  std::vector<Ids> out;
  Ids pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == k) {
      out.push_back(pick);
      return;
    }
    for (int i = start; i < universe; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Condition (1)/(2) adjacency of the auxiliary graph straight from the
// definition: vertices reaching k+1 vertices; path either way, or a common
// out-neighbour w reaching k vertices in G - {u, v}.
inline std::set<std::pair<int, int>> aux_edges(const Digraph& g, int k) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> nodes;
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(reach(g, v).size()) >= k + 1) nodes.push_back(v);
  }
  auto has_arc = [&](int u, int v) {
    for (const auto& a : g.arcs()) {
      if (a.tail == u && a.head == v) return true;
    }
    return false;
  };
  std::set<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      int u = nodes[i];
      int v = nodes[j];
      bool ok = reach(g, u).count(v) || reach(g, v).count(u);
      for (int w = 0; w < n && !ok; ++w) {
        if (w == u || w == v || !has_arc(u, w) || !has_arc(v, w)) continue;
        ok = static_cast<int>(reach(g, w, {u, v}).size()) >= k;
      }
      if (ok) edges.insert({u, v});
    }
  }
  return edges;
}

// Plain BFS over member sets with single exchanges.
template <typename Member>
std::optional<int> distance(int universe, const Ids& s, const Ids& t, Member member) {
  std::map<Ids, int> dist{{s, 0}};
  std::vector<Ids> queue{s};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Ids cur = queue[head];
    if (cur == t) return dist[cur];
    for (int out : cur) {
      for (int in = 0; in < universe; ++in) {
        if (std::find(cur.begin(), cur.end(), in) != cur.end()) continue;
        Ids next;
        for (int x : cur) {
          if (x != out) next.push_back(x);
        }
        next.push_back(in);
        std::sort(next.begin(), next.end());
        if (dist.count(next) || !member(next)) continue;
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

}  // namespace naive

#endif  // RECONF_TESTS_NAIVE_HPP
