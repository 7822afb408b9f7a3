// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "reconf/exchange.hpp"
#include "reconf/feedback.hpp"
#include "reconf/generate.hpp"
#include "reconf/oracle.hpp"
#include "reconf/pathreconf.hpp"
#include "reconf/reachability.hpp"
#include "reconf/rooted.hpp"

using namespace reconf;

namespace {

// Pinned thresholds.
constexpr std::size_t kRandomSequenceInstances = 1000;  // criterion 2
constexpr std::size_t kRandomSpanningGraphs = 1000;     // criterion 3
constexpr std::size_t kPathStatesRequired = 10'000;     // criterion 7
constexpr double kDecideSecondsLimit = 60.0;            // criterion 8
constexpr double kDoublingRatioLimit = 4.0;             // criterion 8
constexpr std::size_t kLengthTolerance = 0;             // criteria 3, 4: exact

struct Result {
  bool pass = true;
  std::string detail;
  std::string failure;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      failure = what;
    }
  }
};

std::string graph_text(const Digraph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " arcs=";
  for (const Arc& a : g.arcs()) {
    s += "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
  }
  return s;
}

std::vector<Digraph> all_digraphs(std::size_t n) {
  std::vector<Digraph> out;
  const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1));
  for (std::uint64_t mask = 0; mask < limit; ++mask) out.push_back(digraph_from_mask(n, mask));
  return out;
}

FamilyPredicate sized_trees(const Digraph& g, std::size_t k) {
  return [&g, k](const IdSet& s) { return s.size() == k && as_directed_tree(g, s); };
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct YesInstance {
  std::size_t graph;
  IdSet source;
  IdSet target;
  std::size_t k;
};

// Criterion 1, keeping yes-instances for criterion 2.
Result oracle_equivalence(const std::vector<Digraph>& graphs, std::vector<YesInstance>& yes) {
  Result r;
  std::size_t instances = 0;
  std::size_t no = 0;
  for (std::size_t gi = 0; gi < graphs.size() && r.pass; ++gi) {
    const Digraph& g = graphs[gi];
    for (std::size_t k = 2; k <= 3; ++k) {
      ReconfigurationGraph rg(tree_family(g, k));
      const auto& m = rg.members();
      std::vector<TreeView> views;
      for (const auto& s : m) views.push_back(validate_directed_tree(g, s));
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          const bool fast = decide(g, views[i], views[j]);
          const bool truth = rg.component(i) == rg.component(j);
          ++instances;
          r.require(fast == truth, graph_text(g) + " k=" + std::to_string(k) + " source " +
                                       to_string(m[i]) + " target " + to_string(m[j]));
          if (truth) {
            yes.push_back({gi, m[i], m[j], k});
          } else {
            ++no;
          }
        }
      }
    }
  }
  r.detail = std::to_string(graphs.size()) + " digraphs, " + std::to_string(instances) +
             " ordered tree pairs (" + std::to_string(no) + " no-instances), agreement " +
             (r.pass ? "100%" : "broken");
  return r;
}

Result sequence_validity(const std::vector<Digraph>& graphs, const std::vector<YesInstance>& yes) {
  Result r;
  std::size_t max_length = 0;
  std::size_t total = 0;
  std::size_t checked = 0;
  double worst_ratio = 0;
  auto check = [&](const Digraph& g, const IdSet& a, const IdSet& b, std::size_t k,
                   const AuxiliaryGraph* aux) {
    auto ta = validate_directed_tree(g, a);
    auto tb = validate_directed_tree(g, b);
    ReconfigSequence seq;
    try {
      seq = aux != nullptr ? build_sequence(g, *aux, ta, tb) : build_sequence(g, ta, tb);
    } catch (const std::exception& e) {
      r.require(false, graph_text(g) + ": " + e.what());
      return;
    }
    auto verdict = validate_sequence(sized_trees(g, k), seq, a, b);
    r.require(verdict.valid, graph_text(g) + " " + to_string(a) + " -> " + to_string(b) +
                                 ": " + verdict.reason);
    const std::size_t bound = sequence_length_guard(g, k);
    r.require(seq.length() <= bound, graph_text(g) + ": length over 4|V|^2 k");
    max_length = std::max(max_length, seq.length());
    worst_ratio = std::max(worst_ratio, static_cast<double>(seq.length()) / bound);
    total += seq.length();
    ++checked;
  };

  std::size_t current = static_cast<std::size_t>(-1);
  std::optional<AuxiliaryGraph> aux2, aux3;
  for (const auto& inst : yes) {
    if (inst.graph != current) {
      current = inst.graph;
      aux2.emplace(graphs[current], 2);
      aux3.emplace(graphs[current], 3);
    }
    check(graphs[current], inst.source, inst.target, inst.k, inst.k == 2 ? &*aux2 : &*aux3);
  }
  const std::size_t exhaustive = checked;
  const std::size_t exhaustive_max = max_length;

  Random rng(20240601);
  std::size_t random_yes = 0;
  std::size_t random_max = 0;
  while (random_yes < kRandomSequenceInstances && r.pass) {
    Digraph g = random_digraph(8, 0.12 + 0.2 * rng.unit(), rng);
    const std::size_t k = 2 + rng.below(5);
    auto a = random_tree(g, k, rng);
    auto b = random_tree(g, k, rng);
    if (!a || !b) continue;
    if (!decide(g, validate_directed_tree(g, *a), validate_directed_tree(g, *b))) continue;
    const std::size_t before = max_length;
    max_length = 0;
    check(g, *a, *b, k, nullptr);
    random_max = std::max(random_max, max_length);
    max_length = std::max(before, max_length);
    ++random_yes;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu exhaustive yes-instances (max length %zu) + %zu random 8-vertex "
                "yes-instances (max length %zu); mean length %.2f, max length/bound %.3f",
                exhaustive, exhaustive_max, random_yes, random_max,
                checked ? static_cast<double>(total) / checked : 0.0, worst_ratio);
  r.detail = buf;
  return r;
}

Result tight_sequences(const std::vector<std::vector<Digraph>>& small) {
  Result r;
  std::size_t spanning_pairs = 0;
  std::size_t forest_pairs = 0;
  std::size_t same_root_pairs = 0;

  auto spanning_suite = [&](const Digraph& g, std::size_t stride) {
    ReconfigurationGraph rg(spanning_tree_family(g));
    const auto& m = rg.members();
    for (std::size_t i = 0; i < m.size(); i += stride) {
      auto dist = rg.distances_from(i);
      auto ti = validate_directed_tree(g, m[i]);
      for (std::size_t j = 0; j < m.size(); ++j) {
        auto tj = validate_directed_tree(g, m[j]);
        auto seq = shortest_spanning_sequence(g, ti, tj);
        const std::size_t diff = difference_size(m[i], m[j]);
        const std::string where = graph_text(g) + " " + to_string(m[i]) + " -> " + to_string(m[j]);
        r.require(dist[j].has_value() && *dist[j] == diff, where + ": oracle distance differs");
        r.require(seq.length() <= diff + kLengthTolerance && seq.length() >= diff,
                  where + ": length differs from the set difference");
        r.require(validate_sequence([&g](const IdSet& s) { return is_spanning_tree(g, s); },
                                    seq, m[i], m[j])
                      .valid,
                  where + ": invalid sequence");
        if (ti.root() == tj.root()) {
          ++same_root_pairs;
          for (const auto& step : seq.steps) {
            r.require(validate_directed_tree(g, step).root() == ti.root(),
                      where + ": root moved");
          }
        }
        ++spanning_pairs;
      }
    }
  };

  auto forest_suite = [&](const Digraph& g, std::size_t stride) {
    for (std::size_t k = 1; k < g.vertex_count(); ++k) {
      ReconfigurationGraph rg(forest_family(g, k));
      const auto& m = rg.members();
      std::vector<ForestView> views;
      for (const auto& s : m) views.push_back(validate_directed_forest(g, s));
      for (std::size_t i = 0; i < m.size(); i += stride) {
        auto dist = rg.distances_from(i);
        for (std::size_t j = 0; j < m.size(); ++j) {
          auto seq = shortest_forest_sequence(g, views[i], views[j]);
          const std::size_t diff = difference_size(m[i], m[j]);
          const std::string where =
              graph_text(g) + " forest " + to_string(m[i]) + " -> " + to_string(m[j]);
          r.require(dist[j] == diff, where + ": oracle distance differs");
          r.require(seq.length() == diff, where + ": length differs");
          r.require(validate_sequence([&g](const IdSet& s) { return as_directed_forest(g, s).has_value(); },
                                      seq, m[i], m[j])
                        .valid,
                    where + ": invalid sequence");
          ++forest_pairs;
        }
      }
    }
  };

  for (const auto& graphs : small) {
    for (const Digraph& g : graphs) {
      spanning_suite(g, 1);
      forest_suite(g, 1);
      if (!r.pass) break;
    }
  }
  Random rng(77);
  std::size_t random_graphs = 0;
  while (random_graphs < kRandomSpanningGraphs && r.pass) {
    const std::size_t n = 5 + rng.below(2);
    Digraph g = random_digraph(n, 0.3 + 0.3 * rng.unit(), rng);
    if (enumerate_family(spanning_tree_family(g)).empty()) continue;
    // sample source trees on the larger state spaces
    spanning_suite(g, n == 5 ? 1 : 7);
    if (random_graphs % 10 == 0) forest_suite(g, 29);
    ++random_graphs;
  }
  r.detail = std::to_string(spanning_pairs) + " spanning-tree pairs (" +
             std::to_string(same_root_pairs) + " same-root), " + std::to_string(forest_pairs) +
             " forest pairs; exhaustive n<=4 plus " + std::to_string(random_graphs) +
             " random n=5-6 digraphs; length = |S\\S'| = oracle distance in every case";
  return r;
}

Result fixed_root(const std::vector<std::vector<Digraph>>& small) {
  Result r;
  std::size_t tree_pairs = 0;
  std::size_t forest_pairs = 0;
  auto tree_suite = [&](const Digraph& g, std::size_t stride) {
    for (std::size_t k = 1; k < g.vertex_count(); ++k) {
      auto members = enumerate_family(tree_family(g, k));
      std::vector<TreeView> views;
      for (const auto& s : members) views.push_back(validate_directed_tree(g, s));
      for (std::size_t i = 0; i < views.size(); i += stride) {
        for (std::size_t j = 0; j < views.size(); ++j) {
          if (views[i].root() != views[j].root()) continue;
          const VertexId root = views[i].root();
          const std::string where = graph_text(g) + " " + to_string(members[i]) + " -> " +
                                    to_string(members[j]);
          ReconfigSequence seq;
          try {
            seq = fixed_root_sequence(g, views[i], views[j]);
          } catch (const std::exception& e) {
            r.require(false, where + ": " + e.what());
            continue;
          }
          auto rooted = [&g, root, k](const IdSet& s) {
            auto t = as_directed_tree(g, s);
            return s.size() == k && t && t->root() == root;
          };
          r.require(validate_sequence(rooted, seq, members[i], members[j]).valid,
                    where + ": invalid or root moved");
          r.require(seq.length() <= k + kLengthTolerance, where + ": longer than k");
          ++tree_pairs;
        }
      }
    }
  };
  auto forest_suite = [&](const Digraph& g, const VertexSet& roots, std::size_t stride) {
    const std::size_t n = g.vertex_count();
    for (std::size_t k = 1; k + roots.size() <= n; ++k) {
      auto members = enumerate_family(rooted_forest_family(g, k, roots));
      for (std::size_t i = 0; i < members.size(); i += stride) {
        for (std::size_t j = 0; j < members.size(); ++j) {
          const std::string where = graph_text(g) + " R=" + to_string(roots) + " " +
                                    to_string(members[i]) + " -> " + to_string(members[j]);
          ReconfigSequence seq;
          try {
            seq = rooted_forest_sequence(g, members[i], members[j], roots);
          } catch (const std::exception& e) {
            r.require(false, where + ": " + e.what());
            continue;
          }
          auto in_family = [&g, &roots](const IdSet& s) { return is_rooted_forest(g, s, roots); };
          r.require(validate_sequence(in_family, seq, members[i], members[j]).valid,
                    where + ": invalid or roots changed");
          r.require(seq.length() <= k + kLengthTolerance, where + ": longer than k");
          ++forest_pairs;
        }
      }
    }
  };
  auto root_sets = [](std::size_t n) {
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<VertexId> ids;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1u) ids.push_back(static_cast<VertexId>(v));
      }
      out.emplace_back(ids);
    }
    return out;
  };

  for (const auto& graphs : small) {
    for (const Digraph& g : graphs) {
      tree_suite(g, 1);
      for (const auto& roots : root_sets(g.vertex_count())) forest_suite(g, roots, 1);
      if (!r.pass) break;
    }
  }
  Random rng(99);
  for (int round = 0; round < 300 && r.pass; ++round) {
    const std::size_t n = 5 + rng.below(2);
    Digraph g = random_digraph(n, 0.2 + 0.3 * rng.unit(), rng);
    tree_suite(g, n == 5 ? 3 : 17);
    auto sets = root_sets(n);
    forest_suite(g, sets[rng.below(sets.size())], 11);
  }
  r.detail = std::to_string(tree_pairs) + " same-root tree pairs, " +
             std::to_string(forest_pairs) +
             " R-forest pairs (exhaustive n<=4, random n=5-6); all valid, length <= k";
  return r;
}

Result no_instance() {
  Result r;
  const auto& fx = fixtures::no_instance();
  Digraph g(fx.vertices, fx.arcs);
  auto s = validate_directed_tree(g, fx.source);
  auto t = validate_directed_tree(g, fx.target);
  r.require(s.size() == t.size(), "fixture trees differ in size");
  r.require(!decide(g, s, t), "decide says YES");
  r.require(!oracle_decide(tree_family(g, s.size()), s.arcs(), t.arcs()), "oracle says YES");
  r.detail = graph_text(g) + ", trees " + to_string(fx.source) + " and " +
             to_string(fx.target) + ": decide NO, oracle NO";
  return r;
}

std::string path_text(const PathState& p) {
  std::string s;
  for (VertexId v : p) s += (s.empty() ? "" : " ") + std::to_string(v);
  return "(" + s + ")";
}

Result reductions(const std::vector<std::vector<Digraph>>& small,
                  const std::vector<std::vector<Digraph>>& tiny) {
  Result r;
  // index 0: reconfiguration -> sliding, 1: sliding -> reconfiguration
  std::size_t pairs[2] = {0, 0};
  std::size_t disagree[2] = {0, 0};
  std::size_t feedback_pairs = 0;
  std::size_t feedback_disagree = 0;
  std::size_t replayed = 0;
  for (const auto& graphs : small) {
    for (const Digraph& g : graphs) {
      for (std::size_t arcs = 2; arcs <= 3; ++arcs) {
        std::vector<PathState> paths;
        for (const auto& s : enumerate_family(path_family(g, arcs))) {
          paths.push_back(validate_directed_path(g, s).vertices);
        }
        for (const PathState& s : paths) {
          for (PathMode mode : {PathMode::kReconfiguration, PathMode::kSliding}) {
            const bool to_slide = mode == PathMode::kReconfiguration;
            const int side = to_slide ? 0 : 1;
            const PathMode other = to_slide ? PathMode::kSliding : PathMode::kReconfiguration;
            auto original = reachable_paths(g, s, mode);
            std::set<PathState> reach_orig(original.begin(), original.end());
            PathReduction red = to_slide ? reduce_reconf_to_slide(g, s, s)
                                         : reduce_slide_to_reconf(g, s, s);
            auto reduced = reachable_paths(red.graph, red.source, other);
            std::set<PathState> reach_red(reduced.begin(), reduced.end());
            for (const PathState& t : paths) {
              const bool a = reach_orig.count(t) > 0;
              const bool b = reach_red.count(red.map_path(t)) > 0;
              ++pairs[side];
              if (a != b) {
                ++disagree[side];
                r.require(false, graph_text(g) + (to_slide ? " reconf->slide " : " slide->reconf ") +
                                     path_text(s) + " to " + path_text(t) + ": original " +
                                     (a ? "YES" : "NO") + ", reduced " + (b ? "YES" : "NO"));
              }
              if ((pairs[0] + pairs[1]) % 97 == 0) {
                // full round trip through the public entry points
                PathReduction full = to_slide ? reduce_reconf_to_slide(g, s, t)
                                              : reduce_slide_to_reconf(g, s, t);
                const bool c = solve_path(full.graph, full.source, full.target, other).has_value();
                r.require(c == b, graph_text(g) + ": replayed reduction disagrees with reach set");
                ++replayed;
              }
            }
          }
        }
      }
    }
  }
  for (const auto& graphs : tiny) {
    for (const Digraph& g : graphs) {
      FeedbackReduction red = reduce_dfvs_to_dfas(g);
      for (std::size_t k = 1; k <= 2; ++k) {
        auto members = enumerate_family(feedback_vertex_family(g, k));
        for (const auto& x : members) {
          for (const auto& y : members) {
            const bool a = solve_feedback_reconfig({g, x, y, FeedbackMode::kVertex}).has_value();
            const bool b = solve_feedback_reconfig({red.graph, red.map_vertex_set(x),
                                                    red.map_vertex_set(y), FeedbackMode::kArc})
                               .has_value();
            if (a != b) {
              ++feedback_disagree;
              r.require(false, graph_text(g) + " feedback " + to_string(x) + " -> " +
                                   to_string(y) + " disagrees");
            }
            ++feedback_pairs;
          }
        }
      }
    }
  }
  auto part = [](const char* name, std::size_t n, std::size_t bad) {
    return std::string(name) + " " + std::to_string(n - bad) + "/" + std::to_string(n) + " agree";
  };
  r.detail = part("reconf->slide", pairs[0], disagree[0]) + "; " +
             part("slide->reconf", pairs[1], disagree[1]) + "; " +
             part("dfvs->dfas", feedback_pairs, feedback_disagree) + "; " +
             std::to_string(replayed) + " replayed end to end";
  return r;
}

Result path_semantics() {
  Result r;
  Random rng(5150);
  std::size_t states = 0;
  std::size_t shifts = 0;
  while (states < kPathStatesRequired) {
    const std::size_t n = 3 + rng.below(4);
    Digraph g = random_digraph(n, 0.25 + 0.4 * rng.unit(), rng);
    for (std::size_t arcs = 1; arcs < n; ++arcs) {
      for (const auto& s : enumerate_family(path_family(g, arcs))) {
        const PathState p = validate_directed_path(g, s).vertices;
        // direct enumeration of single arc exchanges
        std::set<PathState> direct;
        for (ArcId out : s) {
          for (std::size_t in = 0; in < g.arc_count(); ++in) {
            if (s.contains(static_cast<ArcId>(in))) continue;
            if (auto q = as_directed_path(g, s.exchanged(out, static_cast<ArcId>(in)))) {
              direct.insert(q->vertices);
            }
          }
        }
        auto reconf = path_neighbors(g, p, PathMode::kReconfiguration);
        auto slide = path_neighbors(g, p, PathMode::kSliding);
        std::set<PathState> reconf_set(reconf.begin(), reconf.end());
        r.require(reconf_set == direct, graph_text(g) + ": reconfiguration neighbours differ");
        for (const auto& q : slide) {
          r.require(reconf_set.count(q) > 0, graph_text(g) + ": slide is not an exchange");
        }
        if (p.size() >= 3 && g.find_arc(p.back(), p.front())) {
          PathState forward(p.begin() + 1, p.end());
          forward.push_back(p.front());
          PathState backward{p.back()};
          backward.insert(backward.end(), p.begin(), p.end() - 1);
          r.require(std::find(slide.begin(), slide.end(), forward) != slide.end(),
                    graph_text(g) + ": shift is not a forward slide");
          r.require(std::find(slide.begin(), slide.end(), backward) != slide.end(),
                    graph_text(g) + ": reverse shift is not a backward slide");
          ++shifts;
        }
        ++states;
      }
    }
    if (!r.pass) break;
  }
  r.detail = std::to_string(states) + " path states on random n<=6 digraphs (" +
             std::to_string(shifts) + " with a closing cycle); sliding within reconfiguration";
  return r;
}

Result performance() {
  Result r;
  const std::size_t n = 1000;
  const std::size_t k = 5;
  std::vector<double> times;
  std::string sizes;
  for (std::size_t m : {5000u, 10000u, 20000u}) {
    Random rng(m);
    Digraph g = random_digraph_with_arcs(n, m, rng);
    auto a = random_tree_at(g, 0, k, rng);
    auto b = random_tree_at(g, static_cast<VertexId>(n - 1), k, rng);
    r.require(a && b, "no trees at the sweep roots");
    if (!a || !b) return r;
    auto ta = validate_directed_tree(g, *a);
    auto tb = validate_directed_tree(g, *b);
    double best = 1e100;
    for (int rep = 0; rep < 3; ++rep) {
      auto start = std::chrono::steady_clock::now();
      volatile bool yes = decide(g, ta, tb);
      (void)yes;
      best = std::min(best, seconds_since(start));
    }
    times.push_back(best);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s|A|=%zu: %.3fs", sizes.empty() ? "" : ", ", m, best);
    sizes += buf;
  }
  r.require(times[1] < kDecideSecondsLimit, "decide at |A|=10^4 over the time limit");
  const double ratio1 = times[1] / std::max(times[0], 1e-6);
  const double ratio2 = times[2] / std::max(times[1], 1e-6);
  r.require(ratio1 < kDoublingRatioLimit && ratio2 < kDoublingRatioLimit,
            "doubling |A| quadrupled the runtime");
  char buf[96];
  std::snprintf(buf, sizeof buf, "; doubling ratios %.2f, %.2f", ratio1, ratio2);
  r.detail = "|V|=1000, k=5, best of 3: " + sizes + buf;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  auto wanted = [&only](int c) { return only.empty() || only.count(c) > 0; };

  const std::vector<Digraph> four = all_digraphs(4);
  const std::vector<std::vector<Digraph>> small{all_digraphs(2), all_digraphs(3), four};
  const std::vector<std::vector<Digraph>> tiny{all_digraphs(2), all_digraphs(3)};
  std::vector<YesInstance> yes;

  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"oracle equivalence", [&] { return oracle_equivalence(four, yes); }},
      {"sequence validity and length", [&] { return sequence_validity(four, yes); }},
      {"tight shortest sequences", [&] { return tight_sequences(small); }},
      {"fixed-root bound", [&] { return fixed_root(small); }},
      {"no-instance regression", [&] { return no_instance(); }},
      {"reduction equivalence", [&] { return reductions(small, tiny); }},
      {"path-operation semantics", [&] { return path_semantics(); }},
      {"performance smoke", [&] { return performance(); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i + 1);
    // criterion 2 consumes the yes-instances of criterion 1
    if (!wanted(number) && !(number == 1 && wanted(2))) continue;
    auto start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.pass = false;
      res.failure = std::string("exception: ") + e.what();
    }
    if (!wanted(number)) continue;
    all = all && res.pass;
    std::printf("criterion %d %s: %s [%.1fs] %s%s\n", number, res.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), seconds_since(start), res.detail.c_str(),
                res.pass ? "" : (" -- first failure: " + res.failure).c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
