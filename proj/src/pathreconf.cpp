#include "reconf/pathreconf.hpp"

#include <deque>
#include <numeric>
#include <unordered_map>

namespace reconf {

namespace {

struct PathHash {
  std::size_t operator()(const PathState& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (VertexId v : p) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

bool on_path(const PathState& p, VertexId v, std::size_t first, std::size_t last) {
  for (std::size_t i = first; i < last; ++i) {
    if (p[i] == v) return true;
  }
  return false;
}

}  // namespace

void check_path(const Digraph& g, const PathState& p) {
  if (p.size() < 2) {
    throw InvalidStructure("a path needs at least two vertices");
  }
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    g.check_vertex(p[i]);
    if (seen[p[i]]) {
      throw InvalidStructure("vertex " + std::to_string(p[i]) + " repeats on the path");
    }
    seen[p[i]] = 1;
    if (i > 0 && !g.find_arc(p[i - 1], p[i])) {
      throw InvalidStructure("no arc (" + std::to_string(p[i - 1]) + "," +
                             std::to_string(p[i]) + ")");
    }
  }
}

ArcSet path_arcs(const Digraph& g, const PathState& p) {
  std::vector<ArcId> arcs;
  for (std::size_t i = 1; i < p.size(); ++i) arcs.push_back(*g.find_arc(p[i - 1], p[i]));
  return ArcSet(std::move(arcs));
}

std::vector<PathState> path_neighbors(const Digraph& g, const PathState& p,
                                      PathMode mode) {
  check_path(g, p);
  const std::size_t k = p.size();
  std::vector<PathState> out;

  // Sliding forward: drop v_1, append v.
  for (ArcId a : g.out_arcs(p.back())) {
    VertexId v = g.head(a);
    if (on_path(p, v, 1, k)) continue;
    PathState q(p.begin() + 1, p.end());
    q.push_back(v);
    out.push_back(std::move(q));
  }
  // Sliding backward: drop v_k, prepend v.
  for (ArcId a : g.in_arcs(p.front())) {
    VertexId v = g.tail(a);
    if (on_path(p, v, 0, k - 1)) continue;
    PathState q{v};
    q.insert(q.end(), p.begin(), p.end() - 1);
    out.push_back(std::move(q));
  }

  if (mode == PathMode::kReconfiguration) {
    // Turning at the head: replace v_k.
    for (ArcId a : g.out_arcs(p[k - 2])) {
      VertexId v = g.head(a);
      if (on_path(p, v, 0, k)) continue;
      PathState q(p.begin(), p.end() - 1);
      q.push_back(v);
      out.push_back(std::move(q));
    }
    // Turning at the tail: replace v_1.
    for (ArcId a : g.in_arcs(p[1])) {
      VertexId v = g.tail(a);
      if (on_path(p, v, 0, k)) continue;
      PathState q(p);
      q[0] = v;
      out.push_back(std::move(q));
    }
    // Shifting around the cycle closed by (v_k, v_1).
    if (g.find_arc(p.back(), p.front())) {
      for (std::size_t i = 1; i < k; ++i) {
        PathState q(p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
        q.insert(q.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(std::move(q));
      }
    }
    if (k == 2) {
      for (const Arc& a : g.arcs()) {
        if (a.tail == p[0] && a.head == p[1]) continue;
        out.push_back({a.tail, a.head});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct PathSearch {
  std::vector<PathState> order;
  std::unordered_map<PathState, std::size_t, PathHash> index;
  std::vector<std::size_t> previous;
  bool found = false;
};

PathSearch path_bfs(const Digraph& g, const PathState& source,
                    const PathState* target, PathMode mode,
                    std::size_t state_guard) {
  PathSearch s;
  s.order.push_back(source);
  s.index.emplace(source, 0);
  s.previous.push_back(0);
  if (target != nullptr && source == *target) {
    s.found = true;
    return s;
  }
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    for (PathState& q : path_neighbors(g, s.order[head], mode)) {
      if (s.index.count(q) != 0) continue;
      if (s.order.size() >= state_guard) {
        throw GuardExceeded("path search exceeded the state guard", state_guard);
      }
      s.index.emplace(q, s.order.size());
      s.previous.push_back(head);
      const bool hit = target != nullptr && q == *target;
      s.order.push_back(std::move(q));
      if (hit) {
        s.found = true;
        return s;
      }
    }
  }
  return s;
}

}  // namespace

std::optional<std::vector<PathState>> solve_path(const Digraph& g,
                                                 const PathState& source,
                                                 const PathState& target,
                                                 PathMode mode,
                                                 std::size_t state_guard) {
  check_path(g, source);
  check_path(g, target);
  if (source.size() != target.size()) {
    throw InvalidInput("solve_path: paths differ in size");
  }
  PathSearch s = path_bfs(g, source, &target, mode, state_guard);
  if (!s.found) return std::nullopt;
  std::vector<PathState> walk;
  for (std::size_t i = s.order.size() - 1;; i = s.previous[i]) {
    walk.push_back(s.order[i]);
    if (i == 0) break;
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

std::vector<PathState> reachable_paths(const Digraph& g, const PathState& source,
                                       PathMode mode, std::size_t state_guard) {
  check_path(g, source);
  return path_bfs(g, source, nullptr, mode, state_guard).order;
}

ReconfigSequence to_arc_sequence(const Digraph& g,
                                 const std::vector<PathState>& states) {
  ReconfigSequence seq;
  for (const PathState& p : states) seq.steps.push_back(path_arcs(g, p));
  return seq;
}

PathState PathReduction::map_path(const PathState& p) const {
  if (kind == Kind::kPendant) return p;
  const auto n = static_cast<VertexId>(original_vertex_count);
  PathState q;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) {
      auto it = std::find(original_arcs.begin(), original_arcs.end(),
                          Arc{p[i - 1], p[i]});
      if (it == original_arcs.end()) {
        throw InvalidStructure("map_path: not a path of the original graph");
      }
      q.push_back(n + static_cast<VertexId>(it - original_arcs.begin()));
    }
    q.push_back(p[i]);
  }
  return q;
}

PathReduction reduce_reconf_to_slide(const Digraph& g, const PathState& source,
                                     const PathState& target) {
  check_path(g, source);
  check_path(g, target);
  const std::size_t n = g.vertex_count();
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  for (std::size_t v = 0; v < n; ++v) {
    const auto vin = static_cast<VertexId>(n + 2 * v);
    const auto vout = static_cast<VertexId>(n + 2 * v + 1);
    arcs.push_back({vin, static_cast<VertexId>(v)});
    arcs.push_back({static_cast<VertexId>(v), vout});
  }
  PathReduction r;
  r.kind = PathReduction::Kind::kPendant;
  r.original_arcs.assign(g.arcs().begin(), g.arcs().end());
  r.graph = Digraph(3 * n, std::move(arcs));
  r.original_vertex_count = n;
  r.vertex_map.resize(n);
  std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
  r.arc_map.resize(g.arc_count());
  std::iota(r.arc_map.begin(), r.arc_map.end(), 0);
  r.source = source;
  r.target = target;
  return r;
}

PathReduction reduce_slide_to_reconf(const Digraph& g, const PathState& source,
                                     const PathState& target) {
  check_path(g, source);
  check_path(g, target);
  const std::size_t n = g.vertex_count();
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.arc_count());
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arcs()[e];
    const auto mid = static_cast<VertexId>(n + e);
    arcs.push_back({a.tail, mid});
    arcs.push_back({mid, a.head});
  }
  PathReduction r;
  r.kind = PathReduction::Kind::kSubdivision;
  r.original_arcs.assign(g.arcs().begin(), g.arcs().end());
  r.graph = Digraph(n + g.arc_count(), std::move(arcs));
  r.original_vertex_count = n;
  r.vertex_map.resize(n);
  std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
  r.arc_map.resize(g.arc_count());
  for (std::size_t e = 0; e < g.arc_count(); ++e) r.arc_map[e] = static_cast<ArcId>(2 * e);
  r.source = r.map_path(source);
  r.target = r.map_path(target);
  return r;
}

bool is_standard_path(const PathReduction& r, const PathState& p) {
  const auto n = static_cast<VertexId>(r.original_vertex_count);
  return !p.empty() && p.front() < n && p.back() < n;
}

}  // namespace reconf
