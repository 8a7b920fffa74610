#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "divisible/coloring.hpp"
#include "divisible/divisibility.hpp"
#include "divisible/io.hpp"
#include "divisible/oracles.hpp"
#include "divisible/recognition.hpp"

namespace py = pybind11;
using namespace divisible;

namespace {

py::object embedding(const std::optional<Embedding>& e) {
  if (!e) return py::none();
  return py::make_tuple(e->name(), e->vertices);
}

VertexSet to_set(const Graph& g, const std::vector<int>& vs) { return VertexSet(g.order(), vs); }

WeightFn to_weights(const Graph& g, const std::optional<std::vector<std::int64_t>>& w) {
  return w ? WeightFn(*w) : WeightFn::unit(g.order());
}

py::dict coloring_dict(const ColoringOutcome& c) {
  py::dict d;
  d["assignment"] = c.coloring.assignment;
  d["colors_used"] = c.certificate.colors_used;
  d["omega"] = c.certificate.omega;
  d["bound"] = c.certificate.bound_value;
  return d;
}

PyObject* base_error = nullptr;
PyObject* not_in_class = nullptr;
PyObject* budget = nullptr;
PyObject* parse = nullptr;
PyObject* theorem = nullptr;

PyObject* new_error(py::module_& m, const char* name, PyObject* base) {
  PyObject* type = PyErr_NewException((std::string("divisible._divisible.") + name).c_str(), base, nullptr);
  m.add_object(name, py::handle(type));
  return type;
}

}  // namespace

PYBIND11_MODULE(_divisible, m) {
  m.doc() = "Recognition, divisions and colourings for small graphs.";

  base_error = new_error(m, "DivisibleError", PyExc_RuntimeError);
  not_in_class = new_error(m, "NotInClassError", base_error);
  budget = new_error(m, "BudgetExceeded", base_error);
  parse = new_error(m, "ParseError", base_error);
  theorem = new_error(m, "TheoremViolation", base_error);

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotInClassError& e) {
      py::list witnesses;
      for (const auto& w : e.witnesses()) witnesses.append(py::make_tuple(w.name(), w.vertices));
      py::object exc = py::reinterpret_steal<py::object>(PyObject_CallFunction(not_in_class, "s", e.what()));
      exc.attr("witnesses") = witnesses;
      PyErr_SetObject(not_in_class, exc.ptr());
    } catch (const BudgetExceeded& e) {
      PyErr_SetString(budget, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(parse, e.what());
    } catch (const TheoremViolation& e) {
      PyErr_SetString(theorem, e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(base_error, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", &emit_graph6)
      .def("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("__len__", &Graph::order)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + emit_graph6(g) + "')"; });

  m.def("classify", [](const Graph& g) {
    const auto r = classify(g);
    py::dict d;
    d["p5_free"] = r.p5_free;
    d["c5_free"] = r.c5_free;
    d["bull_free"] = r.bull_free;
    d["odd_hole_free"] = r.odd_hole_free;
    d["perfect"] = r.perfect;
    d["witnesses"] = py::make_tuple(embedding(r.p5_witness), embedding(r.c5_witness), embedding(r.bull_witness),
                                    embedding(r.odd_hole_witness), embedding(r.imperfection_witness));
    return d;
  });
  m.def("is_perfect", [](const Graph& g) { return is_perfect(g).perfect; });
  m.def("find_homogeneous_set", [](const Graph& g) -> std::optional<std::vector<int>> {
    if (auto x = find_homogeneous_set(g)) return x->members();
    return std::nullopt;
  });
  m.def("clique_number", [](const Graph& g) { return clique_number(g).value; });
  m.def("chromatic_number", [](const Graph& g) { return chromatic_number_exact(g).colors; });

  m.def("two_divide", [](const Graph& g) {
    const auto d = two_divide(g);
    return py::make_tuple(d.a.members(), d.b.members());
  });
  m.def(
      "perfect_divide",
      [](const Graph& g, const std::optional<std::vector<std::int64_t>>& weights) {
        const auto d = perfect_divide(g, to_weights(g, weights));
        return py::make_tuple(d.p.members(), d.w_side.members());
      },
      py::arg("graph"), py::arg("weights") = py::none());
  m.def("verify_two_division", [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    return verify_two_division(g, to_set(g, a), to_set(g, b)).ok;
  });
  m.def(
      "verify_perfect_division",
      [](const Graph& g, const std::vector<int>& p, const std::vector<int>& w,
         const std::optional<std::vector<std::int64_t>>& weights) {
        return verify_perfect_division(g, to_weights(g, weights), to_set(g, p), to_set(g, w)).ok;
      },
      py::arg("graph"), py::arg("p"), py::arg("w"), py::arg("weights") = py::none());
  m.def("is_two_divisible", [](const Graph& g) { return is_two_divisible_oracle(g).divisible; });

  m.def("color_via_two_division", [](const Graph& g) { return coloring_dict(color_via_two_division(g)); });
  m.def("color_via_perfect_division", [](const Graph& g) { return coloring_dict(color_via_perfect_division(g)); });
}
