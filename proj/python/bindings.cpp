#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rgt/bench.hpp"
#include "rgt/families.hpp"
#include "rgt/interp.hpp"
#include "rgt/parse.hpp"
#include "rgt/programs.hpp"

namespace py = pybind11;
using namespace rgt;

namespace {

Label label_from_py(const py::object& obj) {
  Label out;
  if (obj.is_none()) return out;
  for (const py::handle item : obj) {
    if (py::isinstance<py::int_>(item)) out.push_back(Atom{item.cast<int64_t>()});
    else if (py::isinstance<py::str>(item)) out.push_back(Atom{item.cast<std::string>()});
    else throw py::type_error("label atoms must be int or str");
  }
  return out;
}

py::list label_to_py(const Label& l) {
  py::list out;
  for (const Atom& a : l) {
    if (is_int(a)) out.append(std::get<int64_t>(a));
    else out.append(std::get<std::string>(a));
  }
  return out;
}

template <class T>
T unwrap(ParseResult<T>&& r) {
  if (!r.ok()) {
    std::string msg = "parse failed:";
    for (const Diagnostic& d : r.diags) msg += "\n  " + to_string(d);
    throw py::value_error(msg);
  }
  return std::move(*r);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rooted graph transformation runtime";

  py::enum_<Backend>(m, "Backend")
      .value("indexed", Backend::Indexed)
      .value("legacy", Backend::Legacy);

  py::enum_<NodeMark>(m, "NodeMark")
      .value("none", NodeMark::Unmarked)
      .value("grey", NodeMark::Grey)
      .value("red", NodeMark::Red)
      .value("green", NodeMark::Green)
      .value("blue", NodeMark::Blue);

  py::enum_<EdgeMark>(m, "EdgeMark")
      .value("none", EdgeMark::Unmarked)
      .value("dashed", EdgeMark::Dashed)
      .value("red", EdgeMark::Red)
      .value("green", EdgeMark::Green)
      .value("blue", EdgeMark::Blue);

  py::enum_<Orientation>(m, "Orientation")
      .value("in_", Orientation::In)
      .value("out", Orientation::Out)
      .value("loop", Orientation::Loop);

  py::enum_<Outcome>(m, "Outcome")
      .value("success", Outcome::Success)
      .value("failure", Outcome::Failure);

  py::class_<NodeId>(m, "NodeId")
      .def_readonly("index", &NodeId::index)
      .def_readonly("gen", &NodeId::gen)
      .def("__eq__", [](NodeId a, NodeId b) { return a == b; })
      .def("__hash__", [](NodeId id) { return std::hash<NodeId>{}(id); })
      .def("__repr__", [](NodeId id) {
        return "NodeId(" + std::to_string(id.index) + ", " + std::to_string(id.gen) + ")";
      });

  py::class_<EdgeId>(m, "EdgeId")
      .def_readonly("index", &EdgeId::index)
      .def_readonly("gen", &EdgeId::gen)
      .def("__eq__", [](EdgeId a, EdgeId b) { return a == b; })
      .def("__hash__", [](EdgeId id) { return std::hash<EdgeId>{}(id); })
      .def("__repr__", [](EdgeId id) {
        return "EdgeId(" + std::to_string(id.index) + ", " + std::to_string(id.gen) + ")";
      });

  py::class_<StepCounters>(m, "StepCounters")
      .def_readonly("steps", &StepCounters::steps)
      .def_readonly("node_entries", &StepCounters::node_entries)
      .def_readonly("edge_entries", &StepCounters::edge_entries)
      .def_readonly("root_probes", &StepCounters::root_probes);

  py::class_<HostGraph>(m, "HostGraph")
      .def(py::init<Backend>(), py::arg("backend") = Backend::Indexed)
      .def("add_node",
           [](HostGraph& g, const py::object& label, NodeMark mark, bool rooted) {
             return g.add_node(label_from_py(label), mark, rooted);
           },
           py::arg("label") = py::none(), py::arg("mark") = NodeMark::Grey,
           py::arg("rooted") = false)
      .def("add_edge",
           [](HostGraph& g, NodeId s, NodeId t, const py::object& label, EdgeMark mark) {
             return g.add_edge(s, t, label_from_py(label), mark);
           },
           py::arg("src"), py::arg("tgt"), py::arg("label") = py::none(),
           py::arg("mark") = EdgeMark::Unmarked)
      .def("delete_node", &HostGraph::delete_node)
      .def("delete_edge", &HostGraph::delete_edge)
      .def("set_node_mark", &HostGraph::set_node_mark)
      .def("set_edge_mark", &HostGraph::set_edge_mark)
      .def("set_root", &HostGraph::set_root)
      .def("node_mark", py::overload_cast<NodeId>(&HostGraph::get_mark, py::const_))
      .def("edge_mark", py::overload_cast<EdgeId>(&HostGraph::get_mark, py::const_))
      .def("node_label",
           [](const HostGraph& g, NodeId id) { return label_to_py(g.get_label(id)); })
      .def("edge_label",
           [](const HostGraph& g, EdgeId id) { return label_to_py(g.get_label(id)); })
      .def("is_rooted", &HostGraph::is_rooted)
      .def("source", &HostGraph::get_source)
      .def("target", &HostGraph::get_target)
      .def("indeg", &HostGraph::indeg)
      .def("outdeg", &HostGraph::outdeg)
      .def("loopdeg", &HostGraph::loopdeg)
      .def("first_host_node", &HostGraph::first_host_node)
      .def("next_host_node", &HostGraph::next_host_node)
      .def("first_root_node", &HostGraph::first_root_node)
      .def("first_edge", &HostGraph::first_edge)
      .def("next_edge", &HostGraph::next_edge)
      .def("nodes", &HostGraph::nodes)
      .def("edges", &HostGraph::edges)
      .def_property_readonly("node_count", &HostGraph::node_count)
      .def_property_readonly("edge_count", &HostGraph::edge_count)
      .def_property_readonly("root_count", &HostGraph::root_count)
      .def_property_readonly("backend", &HostGraph::backend)
      .def("counters", &HostGraph::counters, py::return_value_policy::copy)
      .def("reset_counters", &HostGraph::reset_counters)
      .def("check_invariants", &HostGraph::check_invariants)
      .def("copy", [](const HostGraph& g) { return HostGraph(g); })
      .def("__repr__", [](const HostGraph& g) {
        return "HostGraph(" + std::string(to_string(g.backend())) + ", nodes=" +
               std::to_string(g.node_count()) + ", edges=" + std::to_string(g.edge_count()) +
               ")";
      });

  m.def("observably_equal", &observably_equal);

  py::class_<Program>(m, "Program")
      .def_property_readonly("procedures",
                             [](const Program& p) {
                               py::list names;
                               for (const auto& [n, c] : p.procedures) names.append(n);
                               return names;
                             })
      .def_property_readonly("rules", [](const Program& p) {
        py::list names;
        for (const auto& [n, r] : p.rules) names.append(n);
        return names;
      });

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("outcome", &RunResult::outcome)
      .def_readonly("rule_apps", &RunResult::rule_apps)
      .def_readonly("rule_calls", &RunResult::rule_calls)
      .def_readonly("rule_attempts", &RunResult::rule_attempts);

  py::class_<BenchRecord>(m, "BenchRecord")
      .def_readonly("program", &BenchRecord::program)
      .def_readonly("family", &BenchRecord::family)
      .def_readonly("backend", &BenchRecord::backend)
      .def_readonly("nodes", &BenchRecord::nodes)
      .def_readonly("edges", &BenchRecord::edges)
      .def_readonly("size", &BenchRecord::size)
      .def_readonly("steps", &BenchRecord::steps)
      .def_readonly("rule_apps", &BenchRecord::rule_apps)
      .def_readonly("wall_ms", &BenchRecord::wall_ms)
      .def_readonly("outcome", &BenchRecord::outcome);

  m.def("program_names", [] { return program_names(); });
  m.def("build_program", &build_program, py::arg("name"));

  m.def("generate",
        [](const std::string& family, uint64_t size, uint64_t width, uint64_t height,
           uint64_t k, Backend backend) {
          auto kind = family_from_string(family);
          if (!kind) throw py::value_error("unknown family '" + family + "'");
          FamilySpec spec;
          spec.kind = *kind;
          spec.size = size;
          spec.width = width;
          spec.height = height;
          spec.k = k;
          return generate(spec, backend);
        },
        py::arg("family"), py::arg("size"), py::arg("width") = 0, py::arg("height") = 0,
        py::arg("k") = 0, py::arg("backend") = Backend::Indexed);

  m.def("random_digraph", &random_digraph, py::arg("n"), py::arg("m"), py::arg("seed"),
        py::arg("backend") = Backend::Indexed);

  m.def("run",
        [](const Program& p, HostGraph& g, uint64_t max_steps, bool collect_rule_stats) {
          RunOptions opts;
          opts.max_steps = max_steps;
          opts.collect_rule_stats = collect_rule_stats;
          return run(p, g, opts);
        },
        py::arg("program"), py::arg("graph"), py::arg("max_steps") = 0,
        py::arg("collect_rule_stats") = false);

  m.def("run_bench",
        [](const std::string& program, const HostGraph& input, const std::string& family,
           int reps, uint64_t budget) {
          return run_bench(build_program(program), program, input, family, reps, budget);
        },
        py::arg("program"), py::arg("graph"), py::arg("family") = "custom",
        py::arg("reps") = 1, py::arg("budget") = 0);

  m.def("parse_host_graph",
        [](const std::string& text, Backend backend) {
          return unwrap(parse_host_graph(text, backend));
        },
        py::arg("text"), py::arg("backend") = Backend::Indexed);
  m.def("print_host_graph", &print_host_graph);
  m.def("parse_program", [](const std::string& text) { return unwrap(parse_program(text)); });
  m.def("print_program", &print_program);
  m.def("attach_rules", [](Program& p, const std::string& rules_text) {
    auto rules = unwrap(parse_rules(rules_text));
    for (Rule& r : rules) p.rules.insert_or_assign(r.name, std::move(r));
  });

  py::register_exception<BudgetExceeded>(m, "BudgetExceededError");
  py::register_exception<StaleHandle>(m, "StaleHandleError");
}
