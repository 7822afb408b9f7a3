#ifndef RECONF_GENERATE_HPP
#define RECONF_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "reconf/digraph.hpp"
#include "reconf/families.hpp"
#include "reconf/pathreconf.hpp"

namespace reconf {

/// Seeded generator with portable helpers (the standard distributions are
/// implementation-defined, these are not).
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Every ordered pair (u, v), u != v, becomes an arc with probability p.
/// Arc ids follow lexicographic (u, v) order.
Digraph random_digraph(std::size_t n, double p, Random& rng);

/// Digraph with exactly `m` distinct arcs chosen uniformly (m <= n(n-1)).
Digraph random_digraph_with_arcs(std::size_t n, std::size_t m, Random& rng);

/// Digraph on n vertices from the bits of `mask` over the n(n-1) ordered
/// pairs in lexicographic order.
Digraph digraph_from_mask(std::size_t n, std::uint64_t mask);

/// Randomized breadth-first tree prefix with `k` arcs rooted at `root`.
std::optional<ArcSet> random_tree_at(const Digraph& g, VertexId root, std::size_t k,
                                     Random& rng);
/// Same with a random root among those reaching at least k+1 vertices.
std::optional<ArcSet> random_tree(const Digraph& g, std::size_t k, Random& rng);
std::optional<ArcSet> random_spanning_tree(const Digraph& g, Random& rng);
std::optional<ArcSet> random_forest(const Digraph& g, std::size_t k, Random& rng);
std::optional<ArcSet> random_rooted_forest(const Digraph& g, std::size_t k,
                                           const VertexSet& roots, Random& rng);
/// Simple path with `vertices` vertices found by random self-avoiding walks.
std::optional<PathState> random_path(const Digraph& g, std::size_t vertices,
                                     Random& rng);

}  // namespace reconf

#endif  // RECONF_GENERATE_HPP
