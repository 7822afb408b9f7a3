#include "reconf/generate.hpp"

#include <deque>

namespace reconf {

Digraph random_digraph(std::size_t n, double p, Random& rng) {
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && rng.chance(p)) {
        arcs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
      }
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph random_digraph_with_arcs(std::size_t n, std::size_t m, Random& rng) {
  if (n < 2 || m > n * (n - 1)) throw InvalidInput("random_digraph_with_arcs: too many arcs");
  std::vector<char> used(n * n, 0);
  std::vector<Arc> arcs;
  arcs.reserve(m);
  while (arcs.size() < m) {
    std::size_t u = rng.below(n);
    std::size_t v = rng.below(n);
    if (u == v || used[u * n + v]) continue;
    used[u * n + v] = 1;
    arcs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  return Digraph(n, std::move(arcs));
}

Digraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Arc> arcs;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((mask >> bit) & 1U) {
        arcs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
      }
      ++bit;
    }
  }
  return Digraph(n, std::move(arcs));
}

std::optional<ArcSet> random_tree_at(const Digraph& g, VertexId root, std::size_t k,
                                     Random& rng) {
  g.check_vertex(root);
  std::vector<ArcId> tree;
  if (k == 0) return ArcSet{};
  std::vector<char> seen(g.vertex_count(), 0);
  seen[root] = 1;
  std::deque<VertexId> queue{root};
  while (!queue.empty() && tree.size() < k) {
    VertexId v = queue.front();
    queue.pop_front();
    std::vector<ArcId> out(g.out_arcs(v).begin(), g.out_arcs(v).end());
    rng.shuffle(out);
    for (ArcId a : out) {
      VertexId w = g.head(a);
      if (seen[w]) continue;
      seen[w] = 1;
      tree.push_back(a);
      if (tree.size() == k) break;
      queue.push_back(w);
    }
  }
  if (tree.size() < k) return std::nullopt;
  return ArcSet(std::move(tree));
}

std::optional<ArcSet> random_tree(const Digraph& g, std::size_t k, Random& rng) {
  std::vector<VertexId> roots;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (bfs_arcs(g, static_cast<VertexId>(v), k).size() == k) {
      roots.push_back(static_cast<VertexId>(v));
    }
  }
  if (roots.empty()) return std::nullopt;
  return random_tree_at(g, roots[rng.below(roots.size())], k, rng);
}

std::optional<ArcSet> random_spanning_tree(const Digraph& g, Random& rng) {
  if (g.vertex_count() < 2) return std::nullopt;
  return random_tree(g, g.vertex_count() - 1, rng);
}

std::optional<ArcSet> random_forest(const Digraph& g, std::size_t k, Random& rng) {
  std::vector<ArcId> order(g.arc_count());
  for (std::size_t a = 0; a < order.size(); ++a) order[a] = static_cast<ArcId>(a);
  rng.shuffle(order);
  ArcSet forest;
  for (ArcId a : order) {
    if (forest.size() == k) break;
    ArcSet grown = forest;
    grown.insert(a);
    if (as_directed_forest(g, grown)) forest = std::move(grown);
  }
  if (forest.size() < k) return std::nullopt;
  return forest;
}

std::optional<ArcSet> random_rooted_forest(const Digraph& g, std::size_t k,
                                           const VertexSet& roots, Random& rng) {
  Contraction c = contract(g, roots);
  auto tree = random_tree_at(c.graph, c.merged, k, rng);
  if (!tree) return std::nullopt;
  std::vector<ArcId> ids;
  for (ArcId a : *tree) ids.push_back(c.arc_to_original[a]);
  return ArcSet(std::move(ids));
}

std::optional<PathState> random_path(const Digraph& g, std::size_t vertices,
                                     Random& rng) {
  if (vertices < 2 || g.vertex_count() == 0) return std::nullopt;
  for (int attempt = 0; attempt < 200; ++attempt) {
    PathState p{static_cast<VertexId>(rng.below(g.vertex_count()))};
    std::vector<char> used(g.vertex_count(), 0);
    used[p.back()] = 1;
    while (p.size() < vertices) {
      std::vector<VertexId> next;
      for (ArcId a : g.out_arcs(p.back())) {
        if (!used[g.head(a)]) next.push_back(g.head(a));
      }
      if (next.empty()) break;
      VertexId v = next[rng.below(next.size())];
      used[v] = 1;
      p.push_back(v);
    }
    if (p.size() == vertices) return p;
  }
  return std::nullopt;
}

}  // namespace reconf
