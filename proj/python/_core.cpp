// Thin bindings over the command layer: each call returns
// (exit_code, output, error) exactly as the command-line tool would.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vinberg/commands.hpp"

namespace py = pybind11;

namespace {

py::tuple result(const vinberg::CommandResult& r) { return py::make_tuple(r.exit_code, r.output, r.error); }

vinberg::Format format_of(const std::string& name) { return vinberg::parse_format(name); }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vinberg's algorithm for -phi x0^2 + x1^2 + ... + xn^2";
  m.attr("__version__") = VINBERG_VERSION;
  m.attr("EXIT_OK") = static_cast<int>(vinberg::kExitOk);
  m.attr("EXIT_ERROR") = static_cast<int>(vinberg::kExitError);
  m.attr("EXIT_BUDGET") = static_cast<int>(vinberg::kExitBudget);
  m.attr("EXIT_CERTIFIED") = static_cast<int>(vinberg::kExitCertified);

  m.def(
      "run",
      [](long long phi, int dim, std::size_t max_roots, long long max_k0, const std::string& format) {
        py::gil_scoped_release release;
        return vinberg::cmd_run(vinberg::RunFlags{phi, dim, max_roots, max_k0, format_of(format)});
      },
      py::arg("phi") = 3, py::arg("dim"), py::arg("max_roots") = 0, py::arg("max_k0") = 10'000,
      py::arg("format") = "json");
  m.def(
      "check",
      [](const std::string& input, std::optional<int> dim, const std::string& format) {
        py::gil_scoped_release release;
        return vinberg::cmd_check(input, dim, format_of(format));
      },
      py::arg("input"), py::arg("dim") = std::nullopt, py::arg("format") = "json");
  m.def(
      "certify_nonreflective",
      [](long long phi, int dim, const std::string& format) {
        py::gil_scoped_release release;
        return vinberg::cmd_certify(phi, dim, format_of(format));
      },
      py::arg("phi") = 3, py::arg("dim"), py::arg("format") = "json");
  m.def(
      "oracle",
      [](long long phi, int dim, long long max_k0, std::size_t max_roots, const std::string& format) {
        py::gil_scoped_release release;
        return vinberg::cmd_oracle(phi, dim, max_k0, max_roots, format_of(format));
      },
      py::arg("phi") = 3, py::arg("dim"), py::arg("max_k0") = vinberg::kOracleMaxK0, py::arg("max_roots") = 0,
      py::arg("format") = "json");

  py::class_<vinberg::CommandResult>(m, "CommandResult")
      .def_readonly("exit_code", &vinberg::CommandResult::exit_code)
      .def_readonly("output", &vinberg::CommandResult::output)
      .def_readonly("error", &vinberg::CommandResult::error)
      .def("__iter__", [](const vinberg::CommandResult& r) { return py::iter(result(r)); });
}
