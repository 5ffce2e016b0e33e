#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qappell/cli.hpp"
#include "qappell/error.hpp"
#include "qappell/hermite.hpp"
#include "qappell/render.hpp"

namespace py = pybind11;
using namespace qappell;

namespace {

FamilyKind kind(const std::string& name) {
  auto k = parse_family_kind(name);
  if (!k) throw py::value_error("unknown family '" + name + "'");
  return *k;
}

std::string json_list(const std::vector<QRat>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_json(v));
  return a.dump();
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_qappell, m) {
  m.doc() = "Exact q-Appell polynomials; values cross the boundary as JSON text.";

  // Translators run newest first, so the base class goes first.
  py::register_exception<qappell::error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<qappell::pole_error>(m, "PoleError", PyExc_ArithmeticError);
  py::register_exception<qappell::range_error>(m, "RangeError", PyExc_ValueError);

  m.def("families", [] {
    std::vector<std::string> names;
    for (FamilyKind k : kAllFamilies) names.emplace_back(to_string(k));
    return names;
  });
  m.def(
      "family_numbers",
      [](const std::string& family, std::size_t max_n, std::size_t order) {
        return json_list(family_numbers(make_family(kind(family), order), max_n));
      },
      py::arg("family"), py::arg("max_n"), py::arg("order") = kDefaultOrder);
  m.def(
      "appell_polynomial",
      [](const std::string& family, std::size_t n, std::size_t order) {
        return to_json(appell_polynomial(make_family(kind(family), order), n)).dump();
      },
      py::arg("family"), py::arg("n"), py::arg("order") = kDefaultOrder);
  m.def(
      "alpha_coefficients",
      [](const std::string& family, std::size_t max_n, std::size_t order) {
        return json_list(alpha_coefficients(make_family(kind(family), order), max_n));
      },
      py::arg("family"), py::arg("max_n"), py::arg("order") = kDefaultOrder);
  m.def(
      "hermite_series_form", [](int n) { return to_json(hermite_series_form(n)).dump(); }, py::arg("n"));
  m.def(
      "classical_limit",
      [](const std::string& family, std::size_t n) {
        std::vector<std::string> out;
        const RationalPoly p = classical_limit(kind(family), n);
        for (const auto& c : p.coeffs()) out.push_back(to_string(c));
        return out;
      },
      py::arg("family"), py::arg("n"));
  m.def(
      "polynomial_text",
      [](const std::string& family, std::size_t n, std::size_t order) {
        return to_text(appell_polynomial(make_family(kind(family), order), n));
      },
      py::arg("family"), py::arg("n"), py::arg("order") = kDefaultOrder);
  m.def(
      "verify",
      [](const std::string& scope, int max_n, std::size_t order) {
        const VerificationSuite s = run_verification(scope, max_n, order);
        Json j;
        j["verification"] = Json::array();
        for (const auto& r : s.hard) j["verification"].push_back(to_json(r));
        j["discrepancies"] = Json::array();
        for (const auto& d : s.descriptive) j["discrepancies"].push_back(to_json(d));
        j["passed"] = s.passed;
        return j.dump();
      },
      py::arg("scope") = "all", py::arg("max_n") = 12, py::arg("order") = kDefaultOrder);
  m.def("run_cli", &run, py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
