#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msf/caps.hpp"
#include "msf/constructions.hpp"
#include "msf/error.hpp"
#include "msf/group.hpp"
#include "msf/json.hpp"
#include "msf/loopgraph.hpp"
#include "msf/mis.hpp"
#include "msf/sumfree.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const msf::BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(msf::to_decimal(v).c_str(), nullptr, 10));
}

py::object to_py(const msf::json::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

msf::EnumOptions budget(std::uint64_t max_nodes, double max_seconds) {
  msf::EnumOptions o;
  o.max_nodes = max_nodes;
  o.max_seconds = max_seconds;
  return o;
}

msf::ElementSet elements(const msf::GroupSpec& g, const std::vector<std::uint32_t>& xs) {
  msf::ElementSet s(g.order());
  for (std::uint32_t x : xs) {
    if (x >= g.order()) throw msf::InvalidArgument("element " + std::to_string(x) + " outside the group");
    s.insert(x);
  }
  return s;
}

std::vector<std::vector<std::uint32_t>> as_lists(const std::vector<msf::ElementSet>& sets) {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.indices());
  return out;
}

}  // namespace

PYBIND11_MODULE(_msf, m) {
  m.doc() = "Maximal sum-free sets in finite abelian groups";

  py::register_exception<msf::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<msf::VerificationFailure>(m, "VerificationFailure", PyExc_AssertionError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const msf::InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.attr("SCHEMA") = msf::json::kSchema;

  py::class_<msf::GroupSpec>(m, "Group")
      .def(py::init([](const std::string& text) { return msf::parse_group(text); }), py::arg("spec"))
      .def_property_readonly("order", &msf::GroupSpec::order)
      .def_property_readonly("orders", &msf::GroupSpec::orders)
      .def("__str__", &msf::GroupSpec::to_string)
      .def("__repr__", [](const msf::GroupSpec& g) { return "Group('" + g.to_string() + "')"; });

  m.def("classify", [](const msf::GroupSpec& g) { return msf::classify(g).to_string(); }, py::arg("group"));
  m.def("mu", [](const msf::GroupSpec& g) { return msf::mu_formula(g); }, py::arg("group"));

  m.def(
      "count",
      [](const msf::GroupSpec& g, const std::string& what, std::uint64_t max_nodes, double max_seconds) {
        const msf::Quantity q = msf::parse_quantity(what);
        msf::BigInt value;
        {
          py::gil_scoped_release release;
          value = msf::count(g, q, budget(max_nodes, max_seconds)).value;
        }
        return to_py(value);
      },
      py::arg("group"), py::arg("what") = "fmax", py::arg("max_nodes") = 100'000'000, py::arg("max_seconds") = 300.0);

  m.def("is_sumfree", [](const msf::GroupSpec& g, const std::vector<std::uint32_t>& a) {
    return msf::is_sumfree(g, elements(g, a));
  });
  m.def(
      "maximal_sumfree_sets",
      [](const msf::GroupSpec& g, bool distinct) {
        return as_lists(distinct ? msf::maximal_distinct_sumfree_sets(g) : msf::maximal_sumfree_sets(g));
      },
      py::arg("group"), py::arg("distinct") = false);

  m.def(
      "link_graph",
      [](const msf::GroupSpec& g, const std::vector<std::uint32_t>& B, const std::vector<std::uint32_t>& S,
         bool distinct) {
        const auto b = elements(g, B);
        const auto s = elements(g, S);
        return to_adjacency_text(distinct ? msf::distinct_link_graph(g, s, b) : msf::link_graph(g, s, b));
      },
      py::arg("group"), py::arg("B"), py::arg("S"), py::arg("distinct") = false,
      "Adjacency-list text of the link graph L_S[B].");
  m.def("graph_summary", [](const std::string& adjacency) {
    return to_py(msf::json::graph_summary(msf::parse_adjacency_text(adjacency)));
  });
  m.def("to_dot", [](const std::string& adjacency) { return msf::to_dot(msf::parse_adjacency_text(adjacency)); });
  m.def("fixture", [](const std::string& name) { return msf::to_adjacency_text(msf::fixture(name)); });
  m.def("fixture_names", &msf::fixture_names);
  m.def("mis", [](const std::string& adjacency) { return to_py(msf::mis(msf::parse_adjacency_text(adjacency))); },
        py::arg("adjacency"), "Number of maximal independent sets of a graph in adjacency-list text.");

  m.def(
      "construct",
      [](const std::string& family, std::optional<std::string> group, std::uint32_t m_order,
         std::optional<std::string> K) -> py::object {
        const std::optional<msf::GroupSpec> k = K ? std::optional(msf::parse_group(*K)) : std::nullopt;
        if (family == "cyclic-5.1") {
          auto j = msf::json::cyclic(msf::cyclic_construction(m_order));
          j["product_bound"] = msf::json::product_bound(msf::product_lower_bound(m_order, k));
          return to_py(j);
        }
        if (family == "type3-5.3") return to_py(msf::json::construction(msf::type3_construction(m_order, k)));
        if (!group) throw msf::InvalidArgument("family " + family + " needs a group");
        const msf::GroupSpec g = msf::parse_group(*group);
        if (family == "distinct-6.3") return to_py(msf::json::construction(msf::distinct_construction_63(g)));
        if (family == "distinct-6.4") return to_py(msf::json::construction(msf::distinct_construction_64(g)));
        throw msf::InvalidArgument("unknown family '" + family + "'");
      },
      py::arg("family"), py::arg("group") = py::none(), py::arg("m") = 0, py::arg("K") = py::none());

  m.def("verify_prop34", [](std::uint64_t mm, std::uint64_t n) { return msf::verify_prop34(mm, n).holds; },
        py::arg("m"), py::arg("n"));
  m.def("count_complete_caps", [](unsigned k) { return to_py(msf::count_complete_caps(k)); }, py::arg("k"));
  m.def("caps_via_sumfree", [](unsigned k) { return to_py(msf::caps_via_sumfree(k)); }, py::arg("k"));
}
