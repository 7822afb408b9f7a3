#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reconf/exchange.hpp"
#include "reconf/feedback.hpp"
#include "reconf/instance.hpp"
#include "reconf/oracle.hpp"
#include "reconf/pathreconf.hpp"
#include "reconf/reachability.hpp"
#include "reconf/rooted.hpp"

namespace py = pybind11;
using namespace reconf;

namespace {

using Ids = std::vector<std::int32_t>;
using Steps = std::vector<Ids>;

Steps steps_of(const ReconfigSequence& seq) {
  Steps out;
  for (const IdSet& s : seq.steps) out.push_back(s.vector());
  return out;
}

TreeView tree(const Digraph& g, const Ids& arcs) {
  return validate_directed_tree(g, ArcSet(arcs));
}

ForestView forest(const Digraph& g, const Ids& arcs) {
  return validate_directed_forest(g, ArcSet(arcs));
}

PathMode path_mode(const std::string& name) {
  if (name == "sliding") return PathMode::kSliding;
  if (name == "reconfiguration") return PathMode::kReconfiguration;
  throw InvalidInput("path mode must be 'sliding' or 'reconfiguration', got '" + name + "'");
}

FeedbackMode feedback_mode(const std::string& name) {
  if (name == "vertex") return FeedbackMode::kVertex;
  if (name == "arc") return FeedbackMode::kArc;
  throw InvalidInput("feedback mode must be 'vertex' or 'arc', got '" + name + "'");
}

FamilySpec family(const std::string& name, const Digraph& g, std::size_t k,
                  const std::optional<VertexId>& root, const std::optional<Ids>& roots) {
  if (name == "tree") return tree_family(g, k);
  if (name == "rooted-tree") {
    if (!root) throw InvalidInput("rooted-tree needs a root");
    return rooted_tree_family(g, k, *root);
  }
  if (name == "spanning-tree") return spanning_tree_family(g);
  if (name == "forest") return forest_family(g, k);
  if (name == "rooted-forest") {
    if (!roots) throw InvalidInput("rooted-forest needs roots");
    return rooted_forest_family(g, k, VertexSet(*roots));
  }
  if (name == "path") return path_family(g, k);
  if (name == "feedback-vertex-set") return feedback_vertex_family(g, k);
  if (name == "feedback-arc-set") return feedback_arc_family(g, k);
  throw InvalidInput("unknown family '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto invalid_input = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<InvalidStructure>(m, "InvalidStructure", invalid_input.ptr());
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
             std::vector<Arc> list;
             for (auto [u, v] : arcs) list.push_back({u, v});
             return Digraph(n, std::move(list));
           }),
           py::arg("vertices"), py::arg("arcs"))
      .def_property_readonly("vertex_count", &Digraph::vertex_count)
      .def_property_readonly("arc_count", &Digraph::arc_count)
      .def_property_readonly("arcs",
                             [](const Digraph& g) {
                               std::vector<std::pair<VertexId, VertexId>> out;
                               for (const Arc& a : g.arcs()) out.emplace_back(a.tail, a.head);
                               return out;
                             })
      .def("__repr__", [](const Digraph& g) {
        return "<Digraph vertices=" + std::to_string(g.vertex_count()) +
               " arcs=" + std::to_string(g.arc_count()) + ">";
      });

  m.def("is_directed_tree", [](const Digraph& g, const Ids& s) {
    return as_directed_tree(g, ArcSet(s)).has_value();
  });
  m.def("is_directed_forest", [](const Digraph& g, const Ids& s) {
    return as_directed_forest(g, ArcSet(s)).has_value();
  });
  m.def("is_spanning_tree",
        [](const Digraph& g, const Ids& s) { return is_spanning_tree(g, ArcSet(s)); });
  m.def("is_feedback_vertex_set",
        [](const Digraph& g, const Ids& x) { return is_feedback_vertex_set(g, VertexSet(x)); });
  m.def("is_feedback_arc_set",
        [](const Digraph& g, const Ids& y) { return is_feedback_arc_set(g, ArcSet(y)); });

  m.def("decide", [](const Digraph& g, const Ids& s, const Ids& t) {
    return decide(g, tree(g, s), tree(g, t));
  }, py::arg("graph"), py::arg("source"), py::arg("target"));
  m.def("reconfigure", [](const Digraph& g, const Ids& s, const Ids& t) -> std::optional<Steps> {
    TreeView a = tree(g, s);
    TreeView b = tree(g, t);
    if (!decide(g, a, b)) return std::nullopt;
    return steps_of(build_sequence(g, a, b));
  }, py::arg("graph"), py::arg("source"), py::arg("target"));
  m.def("shortest_spanning_sequence", [](const Digraph& g, const Ids& s, const Ids& t) {
    return steps_of(shortest_spanning_sequence(g, tree(g, s), tree(g, t)));
  });
  m.def("shortest_forest_sequence", [](const Digraph& g, const Ids& s, const Ids& t) {
    return steps_of(shortest_forest_sequence(g, forest(g, s), forest(g, t)));
  });
  m.def("fixed_root_sequence", [](const Digraph& g, const Ids& s, const Ids& t) {
    return steps_of(fixed_root_sequence(g, tree(g, s), tree(g, t)));
  });
  m.def("rooted_forest_sequence", [](const Digraph& g, const Ids& s, const Ids& t,
                                     const Ids& roots) {
    return steps_of(rooted_forest_sequence(g, ArcSet(s), ArcSet(t), VertexSet(roots)));
  });

  m.def("solve_path",
        [](const Digraph& g, const Ids& s, const Ids& t, const std::string& mode,
           std::size_t guard) { return solve_path(g, s, t, path_mode(mode), guard); },
        py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("mode") = "reconfiguration",
        py::arg("guard") = kDefaultStateGuard);
  m.def("path_neighbors", [](const Digraph& g, const Ids& p, const std::string& mode) {
    return path_neighbors(g, p, path_mode(mode));
  }, py::arg("graph"), py::arg("path"), py::arg("mode") = "reconfiguration");

  m.def("solve_feedback",
        [](const Digraph& g, const Ids& s, const Ids& t, const std::string& mode,
           std::size_t guard) -> std::optional<Steps> {
          auto seq = solve_feedback_reconfig({g, IdSet(s), IdSet(t), feedback_mode(mode)}, guard);
          if (!seq) return std::nullopt;
          return steps_of(*seq);
        },
        py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("mode") = "vertex",
        py::arg("guard") = kDefaultStateGuard);

  m.def("oracle_distance",
        [](const std::string& name, const Digraph& g, const Ids& s, const Ids& t,
           std::optional<VertexId> root, std::optional<Ids> roots) {
          return oracle_distance(family(name, g, s.size(), root, roots), IdSet(s), IdSet(t));
        },
        py::arg("family"), py::arg("graph"), py::arg("source"), py::arg("target"),
        py::arg("root") = py::none(), py::arg("roots") = py::none());

  m.def("normalize_instance",
        [](const std::string& text) { return serialize_instance(parse_instance(text)); });
  m.def("generate_instance",
        [](const std::string& problem, std::size_t vertices, double p, std::uint64_t seed,
           std::size_t k) {
          GenerateOptions opt;
          opt.problem = parse_problem_kind(problem);
          opt.vertices = vertices;
          opt.arc_probability = p;
          opt.seed = seed;
          opt.k = k;
          return serialize_instance(generate_instance(opt));
        },
        py::arg("problem"), py::arg("vertices") = 6, py::arg("p") = 0.4, py::arg("seed") = 1,
        py::arg("k") = 2);
}
