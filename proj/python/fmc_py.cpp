#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fmc/errors.hpp"
#include "fmc/genfun.hpp"
#include "fmc/nests.hpp"
#include "fmc/oracle.hpp"
#include "fmc/theory.hpp"

namespace py = pybind11;
using namespace fmc;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

py::list poly_list(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

IntPoly poly_from(const py::sequence& seq) {
  std::vector<BigInt> c;
  for (const auto& v : seq) c.push_back(from_py(v));
  return IntPoly(std::move(c));
}

py::list terms_list(const std::vector<DecompositionTerm>& terms) {
  py::list out;
  for (const auto& t : terms) out.append(py::make_tuple(t.m, t.shift, to_py(t.mult)));
  return out;
}

std::vector<std::vector<int>> members_of(const Nest& s) {
  std::vector<std::vector<int>> out;
  for (Subset m : s.members()) out.push_back(labels_of(m));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiplicities and decompositions for configuration spaces X[n]";

  // Translators are tried newest first, so the base class goes in first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<InexactDivision>(m, "InexactDivision", base.ptr());

  m.def("sigma", [](int k, int d) { return poly_list(sigma(k, d)); }, py::arg("k"), py::arg("d"),
        "Coefficients of x + ... + x^(dk-1), low to high.");
  m.def("h_poly", [](int n, int d) { return poly_list(h_recurrence(n, d)); }, py::arg("n"), py::arg("d"));
  m.def(
      "egf_solve",
      [](int n, int d) {
        const Egf series = egf_solve(n, d);
        py::list out;
        for (const auto& c : series.coeffs()) out.append(poly_list(c));
        return out;
      },
      py::arg("n"), py::arg("d"), "h_0 .. h_n from the functional identity.");
  m.def(
      "multiplicity_table",
      [](int n, int d) {
        const auto t = multiplicity_table(n, d);
        py::dict out;
        for (int k = 1; k <= n; ++k) out[py::int_(k)] = poly_list(t.row(k));
        return out;
      },
      py::arg("n"), py::arg("d"), "{m: [a_{m,0}, a_{m,1}, ...]}");
  m.def("decompose_formal", [](int n, int d) { return terms_list(decompose_formal(n, d).terms); }, py::arg("n"),
        py::arg("d"), "[(m, shift, mult)] in canonical order.");
  m.def(
      "brute_bivariate",
      [](int n, int d, bool budget_override) {
        py::dict out;
        for (const auto& [k, p] : brute_bivariate(n, d, {kDefaultNestBudget, budget_override})) {
          out[py::int_(k)] = poly_list(p);
        }
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("budget_override") = false);
  m.def(
      "enumerate_nests",
      [](int n, bool budget_override) {
        py::list out;
        for (const auto& s : enumerate_nests(n, {kDefaultNestBudget, budget_override})) out.append(members_of(s));
        return out;
      },
      py::arg("n"), py::arg("budget_override") = false, "Each nest as a list of label lists.");
  m.def(
      "nest_stats",
      [](int n, const std::vector<std::vector<int>>& members) {
        std::vector<Subset> family;
        for (const auto& labels : members) family.push_back(subset_of(labels));
        const NestStats st = nest_stats(Nest(n, std::move(family)));
        py::list sons;
        for (const auto& [s, c] : st.sons) sons.append(py::make_tuple(labels_of(s), c));
        return py::make_tuple(st.components, sons);
      },
      py::arg("n"), py::arg("members"), "(components, [(member, sons)]).");
  m.def(
      "betti_of_fm", [](const py::sequence& betti, int d, int n) { return poly_list(betti_of_fm(poly_from(betti), d, n)); },
      py::arg("betti"), py::arg("d"), py::arg("n"));
  m.def(
      "kunneth_rational", [](const py::sequence& betti, int k) { return poly_list(kunneth_rational(poly_from(betti), k)); },
      py::arg("betti"), py::arg("m"));
  m.def("x3_oracle", [](int d) { return terms_list(x3_oracle(d).terms); }, py::arg("d"));
  m.def(
      "verify",
      [](int max_n, int max_d, bool budget_override) {
        const auto report = run_verification({max_n, max_d, budget_override});
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict e;
          e["name"] = c.name;
          e["parameters"] = c.parameters;
          e["pass"] = c.pass;
          e["detail"] = c.detail;
          checks.append(e);
        }
        return py::make_tuple(report.overall(), checks);
      },
      py::arg("max_n") = 5, py::arg("max_d") = 3, py::arg("budget_override") = false, "(overall, [check dicts]).");
}
