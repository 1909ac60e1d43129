#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "foxabf/abf_module.hpp"
#include "foxabf/braid.hpp"
#include "foxabf/cli.hpp"
#include "foxabf/foxgroup.hpp"
#include "foxabf/sequences.hpp"
#include "foxabf/wheel.hpp"

namespace py = pybind11;
using namespace foxabf;

namespace {

py::int_ to_py(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::dict group_dict(const AbelianGroup& g) {
  py::list torsion;
  for (const auto& d : g.torsion) torsion.append(to_py(d));
  py::dict out;
  out["torsion"] = torsion;
  out["free_rank"] = g.free_rank;
  out["display"] = g.to_string();
  return out;
}

template <class R, class F>
py::list matrix_list(const Matrix<R>& m, F&& cell) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(cell(m(i, j)));
    rows.append(row);
  }
  return rows;
}

BraidWord make_braid(const py::object& word, std::optional<int> strands) {
  if (py::isinstance<py::str>(word)) return parse_braid(word.cast<std::string>(), strands);
  if (py::isinstance<BraidWord>(word)) return word.cast<BraidWord>();
  auto letters = word.cast<std::vector<int>>();
  if (strands) return BraidWord(*strands, std::move(letters));
  int needed = 1;
  for (int l : letters) needed = std::max(needed, std::abs(l) + 1);
  return BraidWord(needed, std::move(letters));
}

}  // namespace

PYBIND11_MODULE(_foxabf, m) {
  m.doc() = "Fox coloring groups and ABF modules of braid closures";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters", &BraidWord::letters)
      .def("inverse", &BraidWord::inverse)
      .def("reversed", &BraidWord::reversed)
      .def("__mul__", [](const BraidWord& a, const BraidWord& b) { return a * b; })
      .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; })
      .def("__len__", &BraidWord::length)
      .def("__str__", &BraidWord::to_string)
      .def("__repr__", [](const BraidWord& b) {
        return "BraidWord(" + std::to_string(b.strands()) + ", [" + b.to_string() + "])";
      });

  m.def("parse_braid", &parse_braid, py::arg("text"), py::arg("strands") = py::none());
  m.def("wheel_braid", &wheel_braid, py::arg("n"));

  m.def(
      "coloring_group",
      [](const py::object& word, std::optional<int> strands) {
        const ColoringResult r = coloring_group(make_braid(word, strands));
        py::dict out = group_dict(r.group);
        out["determinant"] = to_py(r.determinant);
        out["reduced_matrix"] = matrix_list(r.reduced_matrix, [](const BigInt& v) { return to_py(v); });
        return out;
      },
      py::arg("braid"), py::arg("strands") = py::none(),
      "Reduced Fox coloring group; braid is a string, a list of letters or a BraidWord.");

  m.def(
      "abf_module",
      [](const py::object& word, std::optional<int> strands) {
        const ModulePresentation p = abf_module(make_braid(word, strands));
        py::dict out;
        out["matrix"] = matrix_list(p.matrix, [](const LaurentPoly& v) { return v.to_string(); });
        out["alexander"] = p.alexander.to_string();
        return out;
      },
      py::arg("braid"), py::arg("strands") = py::none());

  m.def(
      "alexander_polynomial",
      [](const py::object& word, std::optional<int> strands) {
        return alexander_polynomial(make_braid(word, strands)).to_string();
      },
      py::arg("braid"), py::arg("strands") = py::none());

  m.def(
      "brute_force_coloring_count",
      [](const py::object& word, int modulus, std::optional<int> strands, std::uint64_t cap) {
        return to_py(brute_force_coloring_count(make_braid(word, strands), modulus, cap));
      },
      py::arg("braid"), py::arg("modulus"), py::arg("strands") = py::none(), py::arg("cap") = kDefaultEnumerationCap);

  m.def("fox_closed_form", [](int n) { return group_dict(fox_closed_form(n)); }, py::arg("n"));

  m.def(
      "wheel_module",
      [](int n) {
        const ModulePresentation p = wheel_module(n);
        py::dict out;
        out["matrix"] = matrix_list(p.matrix, [](const LaurentPoly& v) { return v.to_string(); });
        out["alexander"] = p.alexander.to_string();
        out["ideal_gens"] = py::make_tuple(p.ideal_gens->first.to_string(), p.ideal_gens->second.to_string());
        return out;
      },
      py::arg("n"));

  m.def(
      "cross_verify",
      [](int n, const std::vector<int>& moduli) {
        const WheelReport r = cross_verify(n, moduli);
        py::dict out;
        out["n"] = r.n;
        out["closed_form_group"] = group_dict(r.closed_form_group);
        out["burau_group"] = group_dict(r.burau_group);
        out["burau_group_middle"] = group_dict(r.burau_group_middle);
        py::list gens;
        for (const auto& v : r.abf_gens_at_minus_one) gens.append(to_py(v));
        out["abf_gens_at_minus_one"] = gens;
        py::list brute;
        for (const auto& c : r.brute_force_checks) brute.append(py::make_tuple(c.modulus, to_py(c.count), to_py(c.predicted)));
        out["brute_force_checks"] = brute;
        out["goeritz_ok"] = r.goeritz_ok;
        out["all_consistent"] = r.all_consistent;
        return out;
      },
      py::arg("n"), py::arg("moduli") = std::vector<int>{2, 3, 5});

  m.def("fib", [](long n) { return to_py(fib(n)); }, py::arg("n"));
  m.def("lucas", [](long n) { return to_py(lucas(n)); }, py::arg("n"));

  m.def(
      "identity_suite",
      [](int max_index) {
        py::list out;
        for (const auto& c : identity_suite(max_index).checks) {
          py::dict d;
          d["name"] = c.name;
          d["cases"] = c.cases;
          d["passed"] = c.passed;
          d["counterexample"] = c.counterexample ? py::object(py::str(*c.counterexample)) : py::object(py::none());
          out.append(d);
        }
        return out;
      },
      py::arg("max_index") = 40);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
