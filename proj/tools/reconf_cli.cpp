#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "reconf/exchange.hpp"
#include "reconf/feedback.hpp"
#include "reconf/instance.hpp"
#include "reconf/oracle.hpp"
#include "reconf/pathreconf.hpp"
#include "reconf/reachability.hpp"
#include "reconf/rooted.hpp"

namespace {

using namespace reconf;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

IdSet set_of(const std::vector<std::int32_t>& ids) { return IdSet(ids); }

FeedbackInstance feedback_instance(const Instance& inst) {
  return {inst.graph, set_of(inst.source), set_of(inst.target),
          inst.problem == ProblemKind::kFeedbackVertexSet ? FeedbackMode::kVertex
                                                          : FeedbackMode::kArc};
}

VertexSet roots_of(const Instance& inst) { return VertexSet(*inst.roots); }

// Throws when source or target is not a member of the instance's family.
void check_members(const Instance& inst) {
  const Digraph& g = inst.graph;
  const IdSet s = set_of(inst.source);
  const IdSet t = set_of(inst.target);
  switch (inst.problem) {
    case ProblemKind::kTree:
      validate_directed_tree(g, s);
      validate_directed_tree(g, t);
      return;
    case ProblemKind::kRootedTree: {
      auto a = validate_directed_tree(g, s);
      auto b = validate_directed_tree(g, t);
      if (a.root() != b.root() || (inst.root && *inst.root != a.root())) {
        throw InvalidStructure("source and target must share the instance root");
      }
      return;
    }
    case ProblemKind::kSpanningTree:
      for (const IdSet* x : {&s, &t}) {
        if (!is_spanning_tree(g, *x)) {
          throw InvalidStructure(to_string(*x) + " is not a spanning tree");
        }
      }
      return;
    case ProblemKind::kForest:
      validate_directed_forest(g, s);
      validate_directed_forest(g, t);
      return;
    case ProblemKind::kRootedForest:
      for (const IdSet* x : {&s, &t}) {
        if (!is_rooted_forest(g, *x, roots_of(inst))) {
          throw InvalidStructure(to_string(*x) + " is not a forest rooted in " +
                                 to_string(roots_of(inst)));
        }
      }
      return;
    case ProblemKind::kPathReconfiguration:
    case ProblemKind::kPathSliding:
      check_path(g, inst.source);
      check_path(g, inst.target);
      return;
    case ProblemKind::kFeedbackVertexSet:
    case ProblemKind::kFeedbackArcSet:
      feedback_instance(inst).check();
      return;
  }
}

// Family membership over the instance's elements (arc ids for paths).
FamilyPredicate predicate_of(const Instance& inst) {
  const Digraph& g = inst.graph;
  switch (inst.problem) {
    case ProblemKind::kTree:
      return [&g](const IdSet& s) { return as_directed_tree(g, s).has_value(); };
    case ProblemKind::kRootedTree: {
      const VertexId root = validate_directed_tree(g, set_of(inst.source)).root();
      return [&g, root](const IdSet& s) {
        auto t = as_directed_tree(g, s);
        return t && t->root() == root;
      };
    }
    case ProblemKind::kSpanningTree:
      return [&g](const IdSet& s) { return is_spanning_tree(g, s); };
    case ProblemKind::kForest:
      return [&g](const IdSet& s) { return as_directed_forest(g, s).has_value(); };
    case ProblemKind::kRootedForest:
      return [&g, roots = roots_of(inst)](const IdSet& s) {
        return is_rooted_forest(g, s, roots);
      };
    case ProblemKind::kPathReconfiguration:
    case ProblemKind::kPathSliding:
      return [&g](const IdSet& s) { return as_directed_path(g, s).has_value(); };
    case ProblemKind::kFeedbackVertexSet:
      return [&g](const IdSet& s) { return is_feedback_vertex_set(g, s); };
    case ProblemKind::kFeedbackArcSet:
      return [&g](const IdSet& s) { return is_feedback_arc_set(g, s); };
  }
  return {};
}

FamilySpec family_of(const Instance& inst) {
  const Digraph& g = inst.graph;
  switch (inst.problem) {
    case ProblemKind::kTree:
      return tree_family(g, inst.k);
    case ProblemKind::kRootedTree:
      return rooted_tree_family(g, inst.k,
                                validate_directed_tree(g, set_of(inst.source)).root());
    case ProblemKind::kSpanningTree:
      return spanning_tree_family(g);
    case ProblemKind::kForest:
      return forest_family(g, inst.k);
    case ProblemKind::kRootedForest:
      return rooted_forest_family(g, inst.k, roots_of(inst));
    case ProblemKind::kPathReconfiguration:
      return path_family(g, inst.k - 1);
    case ProblemKind::kPathSliding:
      throw InvalidInput("the oracle covers exchange families; path-sliding is not one");
    case ProblemKind::kFeedbackVertexSet:
      return feedback_vertex_family(g, inst.k);
    case ProblemKind::kFeedbackArcSet:
      return feedback_arc_family(g, inst.k);
  }
  throw InvalidInput("unknown problem kind");
}

// Source and target as element sets.
std::pair<IdSet, IdSet> endpoints(const Instance& inst) {
  if (inst.uses_paths()) {
    return {path_arcs(inst.graph, inst.source), path_arcs(inst.graph, inst.target)};
  }
  return {set_of(inst.source), set_of(inst.target)};
}

PathMode path_mode(const Instance& inst) {
  return inst.problem == ProblemKind::kPathSliding ? PathMode::kSliding
                                                   : PathMode::kReconfiguration;
}

// Empty optional means a no-instance.
std::optional<ReconfigSequence> solve(const Instance& inst, std::size_t guard) {
  check_members(inst);
  const Digraph& g = inst.graph;
  const IdSet s = set_of(inst.source);
  const IdSet t = set_of(inst.target);
  switch (inst.problem) {
    case ProblemKind::kTree: {
      auto a = validate_directed_tree(g, s);
      auto b = validate_directed_tree(g, t);
      if (!decide(g, a, b)) return std::nullopt;
      return build_sequence(g, a, b);
    }
    case ProblemKind::kRootedTree:
      return fixed_root_sequence(g, validate_directed_tree(g, s),
                                 validate_directed_tree(g, t));
    case ProblemKind::kSpanningTree:
      return shortest_spanning_sequence(g, validate_directed_tree(g, s),
                                        validate_directed_tree(g, t));
    case ProblemKind::kForest:
      return shortest_forest_sequence(g, validate_directed_forest(g, s),
                                      validate_directed_forest(g, t));
    case ProblemKind::kRootedForest:
      return rooted_forest_sequence(g, s, t, roots_of(inst));
    case ProblemKind::kPathReconfiguration:
    case ProblemKind::kPathSliding: {
      auto states = solve_path(g, inst.source, inst.target, path_mode(inst), guard);
      if (!states) return std::nullopt;
      return to_arc_sequence(g, *states);
    }
    case ProblemKind::kFeedbackVertexSet:
    case ProblemKind::kFeedbackArcSet:
      return solve_feedback_reconfig(feedback_instance(inst), guard);
  }
  return std::nullopt;
}

bool decide_instance(const Instance& inst, std::size_t guard) {
  check_members(inst);
  const Digraph& g = inst.graph;
  switch (inst.problem) {
    case ProblemKind::kTree:
      return decide(g, validate_directed_tree(g, set_of(inst.source)),
                    validate_directed_tree(g, set_of(inst.target)));
    // Exchange and fixed-root families are always reconfigurable.
    case ProblemKind::kRootedTree:
    case ProblemKind::kSpanningTree:
    case ProblemKind::kForest:
    case ProblemKind::kRootedForest:
      return true;
    default:
      return solve(inst, guard).has_value();
  }
}

SequenceVerdict verify_sliding(const Instance& inst, const ReconfigSequence& seq) {
  std::vector<PathState> paths;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    auto p = as_directed_path(inst.graph, seq.steps[i]);
    if (!p) return {false, i, "step is not a directed path"};
    paths.push_back(p->vertices);
  }
  for (std::size_t i = 1; i < paths.size(); ++i) {
    const PathState& p = paths[i - 1];
    const PathState& q = paths[i];
    const bool forward = std::equal(p.begin() + 1, p.end(), q.begin());
    const bool backward = std::equal(q.begin() + 1, q.end(), p.begin());
    if (!forward && !backward) return {false, i, "step is not a slide"};
  }
  return {};
}

SequenceVerdict verify(const Instance& inst, const ReconfigSequence& seq) {
  check_members(inst);
  const auto [s, t] = endpoints(inst);
  const FamilyPredicate member = predicate_of(inst);
  const std::size_t size = s.size();
  auto sized = [&member, size](const IdSet& x) { return x.size() == size && member(x); };
  SequenceVerdict verdict = validate_sequence(sized, seq, s, t);
  if (verdict && inst.problem == ProblemKind::kPathSliding) {
    verdict = verify_sliding(inst, seq);
  }
  return verdict;
}

void write_dot_frames(const Instance& inst, const ReconfigSequence& seq,
                      const std::string& dir) {
  if (inst.uses_vertices()) throw InvalidInput("DOT frames show arc sets only");
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    std::optional<ArcId> removed;
    std::optional<ArcId> added;
    if (i + 1 < seq.steps.size()) {
      if (auto ex = single_exchange(seq.steps[i], seq.steps[i + 1])) removed = ex->first;
    }
    if (i > 0) {
      if (auto ex = single_exchange(seq.steps[i - 1], seq.steps[i])) added = ex->second;
    }
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03zu.dot", i);
    write_file((std::filesystem::path(dir) / name).string(),
               dot_frame(inst.graph, seq.steps[i], removed, added));
  }
}

Instance reduce(const Instance& inst) {
  check_members(inst);
  Instance out;
  out.k = inst.k;
  auto as_ints = [](const auto& values) {
    return std::vector<std::int32_t>(values.begin(), values.end());
  };
  if (inst.uses_paths()) {
    const bool to_slide = inst.problem == ProblemKind::kPathReconfiguration;
    PathReduction r = to_slide ? reduce_reconf_to_slide(inst.graph, inst.source, inst.target)
                               : reduce_slide_to_reconf(inst.graph, inst.source, inst.target);
    out.problem = to_slide ? ProblemKind::kPathSliding : ProblemKind::kPathReconfiguration;
    out.graph = r.graph;
    out.source = r.source;
    out.target = r.target;
    out.k = r.source.size();
    out.maps = {{"arc_map", as_ints(r.arc_map)}, {"vertex_map", as_ints(r.vertex_map)}};
    return out;
  }
  if (inst.problem == ProblemKind::kFeedbackVertexSet) {
    FeedbackReduction r = reduce_dfvs_to_dfas(inst.graph);
    out.problem = ProblemKind::kFeedbackArcSet;
    out.graph = r.graph;
    out.source = r.map_vertex_set(set_of(inst.source)).vector();
    out.target = r.map_vertex_set(set_of(inst.target)).vector();
    std::vector<std::int32_t> internal;
    for (std::size_t v = 0; v < r.original_vertex_count; ++v) {
      internal.push_back(r.internal_arc(static_cast<VertexId>(v)));
    }
    std::vector<std::int32_t> first_copy;
    for (const auto& copies : r.arc_copies) first_copy.push_back(copies.front());
    out.maps = {{"arc_first_copy", first_copy}, {"vertex_arc", internal}};
    return out;
  }
  throw InvalidInput("no reduction for " + to_string(inst.problem) + " instances");
}

std::string decision_word(bool yes) { return yes ? "YES" : "NO"; }

// Runs `body` per file; one output line per file when there are several.
int for_each_instance(const std::vector<std::string>& files,
                      const std::function<std::pair<int, std::string>(const Instance&)>& body) {
  int worst = kExitYes;
  for (const std::string& file : files) {
    std::string line;
    int code = kExitError;
    try {
      std::tie(code, line) = body(parse_instance(read_file(file)));
    } catch (const GuardExceeded& e) {
      line = std::string("GUARD-EXCEEDED ") + e.what();
    } catch (const std::exception& e) {
      line = std::string("ERROR ") + e.what();
    }
    if (files.size() > 1) {
      std::cout << file << '\t' << line << '\n';
    } else if (code == kExitError) {
      std::cerr << file << ": " << line << '\n';
    } else {
      std::cout << line << '\n';
    }
    worst = std::max(worst, code);
  }
  return worst;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconfiguration of directed trees, forests, paths and feedback sets"};
  app.require_subcommand(1);
  std::size_t guard = 0;
  app.add_option("--guard", guard,
                 "State budget for exhaustive searches (default: RECONF_STATE_GUARD or 10^7)");

  std::vector<std::string> decide_files;
  auto* decide_cmd = app.add_subcommand("decide", "Print YES or NO for each instance");
  decide_cmd->add_option("instances", decide_files)->required()->check(CLI::ExistingFile);

  std::string seq_file;
  std::string seq_output;
  std::string dot_dir;
  auto* sequence_cmd = app.add_subcommand("sequence", "Emit a reconfiguration sequence");
  sequence_cmd->add_option("instance", seq_file)->required()->check(CLI::ExistingFile);
  sequence_cmd->add_option("-o,--output", seq_output, "Write the sequence here");
  sequence_cmd->add_option("--dot", dot_dir, "Directory for per-step DOT frames");

  std::string shortest_file;
  auto* shortest_cmd =
      app.add_subcommand("shortest", "Length of the exchange-based shortest sequence");
  shortest_cmd->add_option("instance", shortest_file)->required()->check(CLI::ExistingFile);

  std::vector<std::string> oracle_files;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive decision and distance");
  oracle_cmd->add_option("instances", oracle_files)->required()->check(CLI::ExistingFile);

  std::string reduce_file;
  std::string reduce_output;
  auto* reduce_cmd = app.add_subcommand(
      "reduce", "Path reconfiguration <-> sliding, feedback vertex -> arc sets");
  reduce_cmd->add_option("instance", reduce_file)->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("-o,--output", reduce_output, "Write the instance here");

  GenerateOptions gen;
  std::string gen_problem = "tree";
  std::size_t gen_count = 1;
  std::string gen_output;
  auto* generate_cmd = app.add_subcommand("generate", "Write reproducible random instances");
  generate_cmd->add_option("--problem", gen_problem, "Problem kind")->capture_default_str();
  generate_cmd->add_option("-n,--vertices", gen.vertices)->capture_default_str();
  generate_cmd->add_option("-p,--probability", gen.arc_probability)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  generate_cmd->add_option("--seed", gen.seed)->capture_default_str();
  generate_cmd->add_option("-k", gen.k, "Solution size (vertices for paths)")
      ->capture_default_str();
  generate_cmd->add_option("--count", gen_count, "Instances for seeds seed..seed+count-1")
      ->capture_default_str();
  generate_cmd->add_option("-o,--output", gen_output,
                           "File (count 1) or directory (count > 1)");

  std::string verify_instance;
  std::string verify_sequence;
  auto* verify_cmd = app.add_subcommand("verify", "Check a sequence file against an instance");
  verify_cmd->add_option("instance", verify_instance)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("sequence", verify_sequence)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  return run_guarded([&]() -> int {
    if (guard == 0) guard = state_guard_from_env();

    if (decide_cmd->parsed()) {
      return for_each_instance(decide_files, [guard](const Instance& inst) {
        const bool yes = decide_instance(inst, guard);
        return std::pair(yes ? kExitYes : kExitNo, decision_word(yes));
      });
    }

    if (oracle_cmd->parsed()) {
      return for_each_instance(oracle_files, [guard](const Instance& inst) {
        check_members(inst);
        const auto [s, t] = endpoints(inst);
        ReconfigurationGraph rg(family_of(inst), guard);
        auto d = rg.distance(s, t);
        std::string line = decision_word(d.has_value());
        if (d) line += " distance=" + std::to_string(*d);
        return std::pair(d ? kExitYes : kExitNo, line);
      });
    }

    if (sequence_cmd->parsed()) {
      const Instance inst = parse_instance(read_file(seq_file));
      auto seq = solve(inst, guard);
      if (!seq) {
        std::cerr << "NO\n";
        return kExitNo;
      }
      if (seq_output.empty()) {
        std::cout << serialize_sequence(*seq);
      } else {
        write_file(seq_output, serialize_sequence(*seq));
      }
      if (!dot_dir.empty()) write_dot_frames(inst, *seq, dot_dir);
      return kExitYes;
    }

    if (shortest_cmd->parsed()) {
      const Instance inst = parse_instance(read_file(shortest_file));
      if (inst.problem != ProblemKind::kSpanningTree && inst.problem != ProblemKind::kForest) {
        throw InvalidInput("shortest handles spanning-tree and forest instances");
      }
      std::cout << solve(inst, guard)->length() << '\n';
      return kExitYes;
    }

    if (reduce_cmd->parsed()) {
      const std::string text =
          serialize_instance(reduce(parse_instance(read_file(reduce_file))));
      if (reduce_output.empty()) {
        std::cout << text;
      } else {
        write_file(reduce_output, text);
      }
      return kExitYes;
    }

    if (generate_cmd->parsed()) {
      gen.problem = parse_problem_kind(gen_problem);
      if (gen_count > 1 && !gen_output.empty()) std::filesystem::create_directories(gen_output);
      const std::uint64_t first = gen.seed;
      for (std::size_t i = 0; i < gen_count; ++i) {
        gen.seed = first + i;
        const std::string text = serialize_instance(generate_instance(gen));
        if (gen_output.empty()) {
          std::cout << text;
        } else if (gen_count == 1) {
          write_file(gen_output, text);
        } else {
          const std::string name = gen_problem + "-" + std::to_string(gen.seed) + ".json";
          write_file((std::filesystem::path(gen_output) / name).string(), text);
        }
      }
      return kExitYes;
    }

    if (verify_cmd->parsed()) {
      const Instance inst = parse_instance(read_file(verify_instance));
      const ReconfigSequence seq = parse_sequence(read_file(verify_sequence));
      const SequenceVerdict verdict = verify(inst, seq);
      if (verdict) {
        std::cout << "valid, length " << seq.length() << '\n';
        return kExitYes;
      }
      std::cout << "invalid";
      if (verdict.index) std::cout << " at step " << *verdict.index;
      std::cout << ": " << verdict.reason << '\n';
      return kExitNo;
    }
    return kExitError;
  });
}
