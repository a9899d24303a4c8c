#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "idemlab/corpus.hpp"
#include "idemlab/error.hpp"
#include "idemlab/group_io.hpp"
#include "idemlab/homology.hpp"
#include "idemlab/oracles.hpp"
#include "idemlab/report.hpp"

namespace py = pybind11;
using namespace idemlab;

namespace {

struct SessionOptions {
  std::optional<std::filesystem::path> cache_dir;
  std::size_t cap_order = kDefaultOrderCap;
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
};

Session make_session(const SessionOptions& o) {
  Limits lim;
  lim.order_cap = o.cap_order;
  lim.budget = o.budget;
  lim.jobs = o.jobs;
  return Session(lim, o.cache_dir);
}

// Reports cross the boundary as JSON text; the package decodes them.
template <class F>
std::string json_call(F&& f) {
  Json j;
  {
    py::gil_scoped_release unlock;
    j = f();
  }
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite groups, cellular covers and Idem";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", invalid.ptr());

  py::class_<SessionOptions>(m, "SessionOptions")
      .def(py::init<>())
      .def_readwrite("cache_dir", &SessionOptions::cache_dir)
      .def_readwrite("cap_order", &SessionOptions::cap_order)
      .def_readwrite("budget", &SessionOptions::budget)
      .def_readwrite("jobs", &SessionOptions::jobs);

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("is_abelian", &FiniteGroup::is_abelian)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("named_group", &named_group, py::arg("name"));
  m.def("parse_group", [](const std::string& text, std::size_t cap) { return load_group(parse_group_spec(text), cap); },
        py::arg("text"), py::arg("cap_order") = kDefaultOrderCap);
  m.def("load_group_file", [](const std::filesystem::path& p, std::size_t cap) { return load_group_file(p, cap); },
        py::arg("path"), py::arg("cap_order") = kDefaultOrderCap);

  m.def("schur_multiplier", [](const FiniteGroup& g) { return schur_multiplier(g).invariant_factors(); },
        py::arg("group"), py::call_guard<py::gil_scoped_release>());
  m.def("count_homs", [](const FiniteGroup& x, const FiniteGroup& g) { return count_homs(x, g); }, py::arg("source"),
        py::arg("target"), py::call_guard<py::gil_scoped_release>());
  m.def("are_isomorphic", [](const FiniteGroup& a, const FiniteGroup& b) { return are_isomorphic(a, b); },
        py::call_guard<py::gil_scoped_release>());

  m.def("_info", [](const FiniteGroup& g, const SessionOptions& o) {
    return json_call([&] {
      Session s = make_session(o);
      return info_report(g, s);
    });
  });
  m.def("_covers", [](const FiniteGroup& g, const SessionOptions& o) {
    return json_call([&] {
      Session s = make_session(o);
      return covers_report(g, s);
    });
  });
  m.def("_idem", [](const FiniteGroup& g, std::size_t iterate, bool inf, const SessionOptions& o) {
    return json_call([&] {
      Session s = make_session(o);
      return idem_report(g, s, iterate, inf);
    });
  });
  m.def("_verify_table", [](const std::filesystem::path& dir, const SessionOptions& o) {
    return json_call([&] {
      Session s = make_session(o);
      return verify_table(dir, s).report;
    });
  });
  m.def("_oracle", [](const std::string& name, const SessionOptions& o) {
    return json_call([&] {
      Session s = make_session(o);
      OracleReport r = run_oracle(name, s);
      return Json{{"suite", r.suite},         {"passed", r.passed()},     {"checks", r.checks},
                  {"nonvacuous", r.nonvacuous}, {"failures", r.failures}, {"messages", r.messages}};
    });
  });
  m.def("oracle_suites", &oracle_suites);
}
