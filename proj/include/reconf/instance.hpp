#ifndef RECONF_INSTANCE_HPP
#define RECONF_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reconf/digraph.hpp"
#include "reconf/errors.hpp"
#include "reconf/sequences.hpp"

namespace reconf {

enum class ProblemKind {
  kTree,                  // source/target: arc ids
  kSpanningTree,          // arc ids
  kRootedTree,            // arc ids, shared root
  kForest,                // arc ids
  kRootedForest,          // arc ids, "roots" required
  kPathReconfiguration,   // vertex sequences
  kPathSliding,           // vertex sequences
  kFeedbackVertexSet,     // vertex ids
  kFeedbackArcSet,        // arc ids
};

std::string to_string(ProblemKind kind);
ProblemKind parse_problem_kind(const std::string& name);

/// Error with a line number (for syntax errors) or a field path.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Versioned JSON instance. `source`/`target` hold arc ids, vertex ids or a
/// path's vertex sequence depending on the problem kind; `k` is their length.
struct Instance {
  static constexpr int kVersion = 1;

  ProblemKind problem = ProblemKind::kTree;
  Digraph graph;
  std::size_t k = 0;
  std::vector<std::int32_t> source;
  std::vector<std::int32_t> target;
  std::optional<VertexId> root;
  std::optional<std::vector<VertexId>> roots;
  /// Named correspondence maps written by reductions, e.g. "vertex_map".
  std::vector<std::pair<std::string, std::vector<std::int32_t>>> maps;

  bool uses_paths() const {
    return problem == ProblemKind::kPathReconfiguration ||
           problem == ProblemKind::kPathSliding;
  }
  bool uses_vertices() const { return problem == ProblemKind::kFeedbackVertexSet; }
};

/// Parses and checks ids against the graph (family membership is checked by
/// the commands that need it).
Instance parse_instance(const std::string& text);
/// Canonical text: fixed key order, one key per line, compact values.
std::string serialize_instance(const Instance& inst);

ReconfigSequence parse_sequence(const std::string& text);
std::string serialize_sequence(const ReconfigSequence& seq);

/// Graphviz rendering of one step: arcs of `current` bold, the arc removed
/// on the way to the next step red, the arc just added blue.
std::string dot_frame(const Digraph& g, const IdSet& current,
                      std::optional<ArcId> removed, std::optional<ArcId> added);

struct GenerateOptions {
  ProblemKind problem = ProblemKind::kTree;
  std::size_t vertices = 6;
  double arc_probability = 0.4;
  std::uint64_t seed = 1;
  std::size_t k = 2;
  std::size_t attempts = 1000;
};

/// Reproducible random instance: the graph and both endpoints come from one
/// seeded stream, retrying with fresh graphs until the family is non-empty.
Instance generate_instance(const GenerateOptions& options);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace reconf

#endif  // RECONF_INSTANCE_HPP
