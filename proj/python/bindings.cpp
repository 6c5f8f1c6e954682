// Python bindings: plain dict/str/int results, big integers passed as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mtasep/combi_r.hpp"
#include "mtasep/error.hpp"
#include "mtasep/markov.hpp"
#include "mtasep/mpf.hpp"
#include "mtasep/multiline.hpp"
#include "mtasep/quantum_r.hpp"

#include <numeric>

namespace py = pybind11;
using namespace mtasep;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::str(x.str())); }

Multiplicity to_mult(const std::vector<int>& counts) {
  Multiplicity m(counts);
  levels_from_multiplicity(m);  // rejects non-basic sectors
  return m;
}

py::dict steady(const std::vector<int>& counts, const std::string& method, std::uint64_t budget) {
  auto m = to_mult(counts);
  SteadyVector sv;
  if (method == "fm")
    sv = fm_steady(m, budget);
  else if (method == "kernel")
    sv = kernel_steady(m, std::min<std::uint64_t>(budget, kKernelBudget));
  else if (method == "mpf")
    sv = mpf_steady(m);
  else
    throw InvalidInput("unknown method '" + method + "' (fm, kernel or mpf)");
  BigInt g = 0;
  for (const auto& [sigma, w] : sv.weights) g = gcd(g, w);
  py::dict out;
  for (const auto& [sigma, w] : sv.weights) out[py::str(sigma.compact())] = to_py(w / g);
  return out;
}

py::dict rmatrix(int l, int m, int length) {
  py::dict out;
  for (const auto& [key, value] : rmatrix_full(l, m, length).entries) {
    const auto& [a, b, i, j] = key;
    out[py::make_tuple(a.str(), b.str(), i.str(), j.str())] = poly_str(value);
  }
  return out;
}

py::dict conjecture(const std::vector<int>& counts, int r, std::uint64_t budget) {
  auto rep = conjecture_check(to_mult(counts), r, budget);
  py::dict out;
  out["configs"] = rep.configs;
  out["states"] = rep.states;
  out["carriers"] = rep.carriers;
  out["failures"] = rep.failures;
  out["stationary"] = rep.stationary;
  out["ok"] = rep.ok();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact steady states and R-matrix checks for the multi-species TASEP";

  static py::exception<BudgetExceeded> budget_exc(mod, "BudgetExceeded", PyExc_RuntimeError);
  static py::exception<ConsistencyError> consistency_exc(mod, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      PyErr_SetString(budget_exc.ptr(), e.what());
    } catch (const ConsistencyError& e) {
      PyErr_SetString(consistency_exc.ptr(), e.what());
    } catch (const InvalidInput& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  mod.def("steady", &steady, py::arg("mult"), py::arg("method") = "fm", py::arg("budget") = default_budget(),
          "Steady-state weights keyed by configuration text, divided by their gcd.");
  mod.def(
      "apply_r",
      [](const std::string& i, const std::string& j) {
        auto img = r_apply(Word::parse(i), Word::parse(j));
        return py::make_tuple(img.b.str(), img.a.str());
      },
      py::arg("i"), py::arg("j"), "Combinatorial R: returns (b, a) for i (x) j.");
  mod.def(
      "ybe_check", [](int k, int l, int m, int length) { return ybe_check(k, l, m, length).ok(); }, py::arg("k"),
      py::arg("l"), py::arg("m"), py::arg("length"));
  mod.def("rmatrix", &rmatrix, py::arg("l"), py::arg("m"), py::arg("length"),
          "Nonzero quantum R elements keyed by (a, b, i, j), as polynomial text in q and z.");
  mod.def(
      "pi", [](const std::string& state) { return pi(MultilineState::parse(state)).str(); }, py::arg("state"),
      "Projection of a multiline state given as comma-separated rows.");
  mod.def(
      "hat_check", [](int n) { return hat_check(n).pass; }, py::arg("n"));
  mod.def(
      "x_operator", [](int i, int n, bool hat) { return (hat ? build_Xhat(i, n) : build_X(i, n)).str(); },
      py::arg("i"), py::arg("n"), py::arg("hat") = false);
  mod.def("conjecture_check", &conjecture, py::arg("mult"), py::arg("r"), py::arg("budget") = default_budget());
}
