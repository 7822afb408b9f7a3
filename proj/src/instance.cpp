#include "reconf/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "reconf/feedback.hpp"
#include "reconf/generate.hpp"

namespace reconf {

using nlohmann::json;

namespace {

constexpr const char* kFormatName = "reconf-instance";

const std::vector<std::pair<ProblemKind, std::string>>& kind_names() {
  static const std::vector<std::pair<ProblemKind, std::string>> names = {
      {ProblemKind::kTree, "tree"},
      {ProblemKind::kSpanningTree, "spanning-tree"},
      {ProblemKind::kRootedTree, "rooted-tree"},
      {ProblemKind::kForest, "forest"},
      {ProblemKind::kRootedForest, "rooted-forest"},
      {ProblemKind::kPathReconfiguration, "path-reconfiguration"},
      {ProblemKind::kPathSliding, "path-sliding"},
      {ProblemKind::kFeedbackVertexSet, "feedback-vertex-set"},
      {ProblemKind::kFeedbackArcSet, "feedback-arc-set"},
  };
  return names;
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line;
    }
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

const json& require(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(key, "missing");
  return *it;
}

std::int64_t as_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) field_error(field, "expected an integer");
  return value.get<std::int64_t>();
}

std::vector<std::int32_t> as_int_list(const json& value, const std::string& field) {
  if (!value.is_array()) field_error(field, "expected an array of integers");
  std::vector<std::int32_t> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(static_cast<std::int32_t>(
        as_int(value[i], field + "[" + std::to_string(i) + "]")));
  }
  return out;
}

void check_ids(const std::vector<std::int32_t>& ids, std::size_t bound,
               const std::string& field, const char* what) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || static_cast<std::size_t>(ids[i]) >= bound) {
      field_error(field + "[" + std::to_string(i) + "]",
                  std::string("invalid ") + what + " id " + std::to_string(ids[i]));
    }
  }
}

}  // namespace

std::string to_string(ProblemKind kind) {
  for (const auto& [k, name] : kind_names()) {
    if (k == kind) return name;
  }
  return "unknown";
}

ProblemKind parse_problem_kind(const std::string& name) {
  for (const auto& [k, n] : kind_names()) {
    if (n == name) return k;
  }
  throw ParseError("unknown problem kind '" + name + "'");
}

Instance parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("line 1: instance must be a JSON object");
  const json& format = require(doc, "format");
  if (!format.is_string() || format.get<std::string>() != kFormatName) {
    field_error("format", std::string("expected \"") + kFormatName + "\"");
  }
  if (as_int(require(doc, "version"), "version") != Instance::kVersion) {
    field_error("version", "unsupported version");
  }

  Instance inst;
  const json& problem = require(doc, "problem");
  if (!problem.is_string()) field_error("problem", "expected a string");
  try {
    inst.problem = parse_problem_kind(problem.get<std::string>());
  } catch (const ParseError& e) {
    field_error("problem", e.what());
  }

  const std::int64_t n = as_int(require(doc, "vertices"), "vertices");
  if (n < 0) field_error("vertices", "must be non-negative");
  const json& arcs = require(doc, "arcs");
  if (!arcs.is_array()) field_error("arcs", "expected an array of [tail, head] pairs");
  std::vector<Arc> arc_list;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string field = "arcs[" + std::to_string(i) + "]";
    auto pair = as_int_list(arcs[i], field);
    if (pair.size() != 2) field_error(field, "expected [tail, head]");
    arc_list.push_back({pair[0], pair[1]});
  }
  try {
    inst.graph = Digraph(static_cast<std::size_t>(n), std::move(arc_list));
  } catch (const InvalidInput& e) {
    field_error("arcs", e.what());
  }

  const std::int64_t k = as_int(require(doc, "k"), "k");
  if (k < 0) field_error("k", "must be non-negative");
  inst.k = static_cast<std::size_t>(k);
  inst.source = as_int_list(require(doc, "source"), "source");
  inst.target = as_int_list(require(doc, "target"), "target");
  if (inst.source.size() != inst.k) field_error("source", "length differs from k");
  if (inst.target.size() != inst.k) field_error("target", "length differs from k");
  const bool vertex_ids = inst.uses_paths() || inst.uses_vertices();
  const std::size_t bound = vertex_ids ? inst.graph.vertex_count() : inst.graph.arc_count();
  const char* what = vertex_ids ? "vertex" : "arc";
  check_ids(inst.source, bound, "source", what);
  check_ids(inst.target, bound, "target", what);
  if (!inst.uses_paths()) {
    for (const auto* field : {"source", "target"}) {
      auto ids = field[0] == 's' ? inst.source : inst.target;
      std::sort(ids.begin(), ids.end());
      if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
        field_error(field, "repeated id");
      }
    }
  }

  if (auto it = doc.find("root"); it != doc.end()) {
    inst.root = static_cast<VertexId>(as_int(*it, "root"));
    check_ids({*inst.root}, inst.graph.vertex_count(), "root", "vertex");
  }
  if (auto it = doc.find("roots"); it != doc.end()) {
    inst.roots = as_int_list(*it, "roots");
    check_ids(*inst.roots, inst.graph.vertex_count(), "roots", "vertex");
  }
  if (inst.problem == ProblemKind::kRootedForest && !inst.roots) {
    field_error("roots", "required for rooted-forest instances");
  }
  if (auto it = doc.find("maps"); it != doc.end()) {
    if (!it->is_object()) field_error("maps", "expected an object");
    for (auto m = it->begin(); m != it->end(); ++m) {
      inst.maps.emplace_back(m.key(), as_int_list(m.value(), "maps." + m.key()));
    }
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json arcs = json::array();
  for (const Arc& a : inst.graph.arcs()) arcs.push_back({a.tail, a.head});
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": " << json(kFormatName).dump() << ",\n";
  out << "  \"version\": " << Instance::kVersion << ",\n";
  out << "  \"problem\": " << json(to_string(inst.problem)).dump() << ",\n";
  out << "  \"vertices\": " << inst.graph.vertex_count() << ",\n";
  out << "  \"arcs\": " << arcs.dump() << ",\n";
  out << "  \"k\": " << inst.k << ",\n";
  out << "  \"source\": " << json(inst.source).dump() << ",\n";
  out << "  \"target\": " << json(inst.target).dump();
  if (inst.root) out << ",\n  \"root\": " << *inst.root;
  if (inst.roots) out << ",\n  \"roots\": " << json(*inst.roots).dump();
  if (!inst.maps.empty()) {
    // Sorted by name, as the parser sees them.
    auto maps = inst.maps;
    std::stable_sort(maps.begin(), maps.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    out << ",\n  \"maps\": {";
    for (std::size_t i = 0; i < maps.size(); ++i) {
      out << (i == 0 ? "\n" : ",\n") << "    " << json(maps[i].first).dump()
          << ": " << json(maps[i].second).dump();
    }
    out << "\n  }";
  }
  out << "\n}\n";
  return out.str();
}

ReconfigSequence parse_sequence(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_array()) throw ParseError("line 1: sequence must be a JSON array");
  ReconfigSequence seq;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    auto ids = as_int_list(doc[i], "[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (ids[j] < 0) {
        field_error("[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                    "negative id");
      }
    }
    seq.steps.emplace_back(std::move(ids));
  }
  return seq;
}

std::string serialize_sequence(const ReconfigSequence& seq) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    out << (i == 0 ? "\n  " : ",\n  ") << json(seq.steps[i].vector()).dump();
  }
  out << (seq.steps.empty() ? "]\n" : "\n]\n");
  return out.str();
}

std::string dot_frame(const Digraph& g, const IdSet& current,
                      std::optional<ArcId> removed, std::optional<ArcId> added) {
  std::ostringstream out;
  out << "digraph frame {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    const auto id = static_cast<ArcId>(a);
    const Arc& arc = g.arcs()[a];
    out << "  " << arc.tail << " -> " << arc.head << " [label=\"" << a << "\"";
    if (removed && *removed == id) {
      out << ", color=red, penwidth=2.5";
    } else if (added && *added == id) {
      out << ", color=blue, penwidth=2.5";
    } else if (current.contains(id)) {
      out << ", penwidth=2.5";
    } else {
      out << ", color=gray70, style=dashed";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::optional<IdSet> random_feedback_set(const Digraph& g, std::size_t k,
                                         FeedbackMode mode, Random& rng) {
  const std::size_t universe =
      mode == FeedbackMode::kVertex ? g.vertex_count() : g.arc_count();
  if (k > universe) return std::nullopt;
  std::vector<std::int32_t> ids(universe);
  for (std::size_t i = 0; i < universe; ++i) ids[i] = static_cast<std::int32_t>(i);
  for (int attempt = 0; attempt < 64; ++attempt) {
    rng.shuffle(ids);
    IdSet s(std::vector<std::int32_t>(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k)));
    const bool ok = mode == FeedbackMode::kVertex ? is_feedback_vertex_set(g, s)
                                                  : is_feedback_arc_set(g, s);
    if (ok) return s;
  }
  return std::nullopt;
}

}  // namespace

Instance generate_instance(const GenerateOptions& options) {
  Random rng(options.seed);
  const std::size_t n = options.vertices;
  const std::size_t k = options.k;
  for (std::size_t attempt = 0; attempt < options.attempts; ++attempt) {
    Instance inst;
    inst.problem = options.problem;
    inst.graph = random_digraph(n, options.arc_probability, rng);
    const Digraph& g = inst.graph;
    std::optional<IdSet> source;
    std::optional<IdSet> target;
    std::optional<PathState> path_source;
    std::optional<PathState> path_target;
    switch (options.problem) {
      case ProblemKind::kTree:
        source = random_tree(g, k, rng);
        target = random_tree(g, k, rng);
        break;
      case ProblemKind::kSpanningTree:
        source = random_spanning_tree(g, rng);
        target = random_spanning_tree(g, rng);
        break;
      case ProblemKind::kRootedTree: {
        std::vector<VertexId> roots;
        for (std::size_t v = 0; v < n; ++v) {
          if (bfs_arcs(g, static_cast<VertexId>(v), k).size() == k) {
            roots.push_back(static_cast<VertexId>(v));
          }
        }
        if (roots.empty()) break;
        inst.root = roots[rng.below(roots.size())];
        source = random_tree_at(g, *inst.root, k, rng);
        target = random_tree_at(g, *inst.root, k, rng);
        break;
      }
      case ProblemKind::kForest:
        source = random_forest(g, k, rng);
        target = random_forest(g, k, rng);
        break;
      case ProblemKind::kRootedForest: {
        if (n < 2) break;
        std::vector<VertexId> all(n);
        for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<VertexId>(v);
        rng.shuffle(all);
        VertexSet roots(std::vector<VertexId>(all.begin(), all.begin() + 1 + static_cast<std::ptrdiff_t>(rng.below(2))));
        inst.roots = roots.vector();
        source = random_rooted_forest(g, k, roots, rng);
        target = random_rooted_forest(g, k, roots, rng);
        break;
      }
      case ProblemKind::kPathReconfiguration:
      case ProblemKind::kPathSliding:
        path_source = random_path(g, k, rng);
        path_target = random_path(g, k, rng);
        break;
      case ProblemKind::kFeedbackVertexSet:
        source = random_feedback_set(g, k, FeedbackMode::kVertex, rng);
        target = random_feedback_set(g, k, FeedbackMode::kVertex, rng);
        break;
      case ProblemKind::kFeedbackArcSet:
        source = random_feedback_set(g, k, FeedbackMode::kArc, rng);
        target = random_feedback_set(g, k, FeedbackMode::kArc, rng);
        break;
    }
    if (path_source && path_target) {
      inst.source = *path_source;
      inst.target = *path_target;
    } else if (source && target) {
      inst.source = source->vector();
      inst.target = target->vector();
    } else {
      continue;
    }
    inst.k = inst.source.size();
    return inst;
  }
  throw InvalidInput("generate: no " + to_string(options.problem) +
                     " instance found in " + std::to_string(options.attempts) +
                     " attempts");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

}  // namespace reconf
