#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superchab/commands.hpp"
#include "superchab/errors.hpp"

namespace py = pybind11;
using namespace superchab;

namespace {

Polynomial polynomial_from(const std::vector<long>& coeffs) {
  return Polynomial(std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

}  // namespace

PYBIND11_MODULE(_superchab, m) {
  m.doc() = "Effective Chabauty bounds for superelliptic curves y^m = f(x).";

  // JSON crosses the boundary as text; the Python side decodes it.
  m.def(
      "run",
      [](const std::string& command, const std::string& text) {
        CommandResult r;
        {
          py::gil_scoped_release release;
          r = run_text(command, text);
        }
        return py::make_tuple(r.json.dump(), r.exit_code, r.summary);
      },
      py::arg("command"), py::arg("text"));

  m.def(
      "genus",
      [](long degree_m, const std::vector<long>& coeffs) {
        return genus(SuperellipticCurve(degree_m, polynomial_from(coeffs)));
      },
      py::arg("m"), py::arg("coefficients"));

  m.def(
      "chabauty_prime", [](long modulus) { return chabauty_prime(modulus).prime; }, py::arg("m"));
  m.def("theorem3_bound", &theorem3_bound, py::arg("g"), py::arg("m"), py::arg("r"), py::arg("p"));
  m.def("stoll_reference_bound", &stoll_reference_bound, py::arg("g"), py::arg("r"));

  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("EXIT_OK") = static_cast<int>(kExitOk);
  m.attr("EXIT_HYPOTHESIS") = static_cast<int>(kExitHypothesis);
  m.attr("EXIT_PARSE") = static_cast<int>(kExitParse);
  m.attr("EXIT_VERIFICATION") = static_cast<int>(kExitVerification);

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
}
