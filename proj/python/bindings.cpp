#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bethe/rmatrix.hpp"
#include "bethe/yangian.hpp"
#include "commands.hpp"

namespace py = pybind11;
using namespace bethe;

namespace {

using StrMatrix = std::vector<std::vector<std::string>>;

StrMatrix to_strings(const Matrix<Rational>& m) {
  StrMatrix out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_string(m(i, j));
  return out;
}

// Report as JSON text plus the exit code the CLI would return.
std::pair<std::string, int> run_json(const std::string& command, const std::string& problem,
                                     std::optional<std::uint64_t> seed, std::optional<double> tol,
                                     std::optional<int> samples) {
  app::json p;
  try {
    p = app::json::parse(problem);
  } catch (const app::json::exception& e) {
    app::json r{{"command", command}, {"status", "error"}, {"error", {{"kind", "SchemaError"}, {"message", e.what()}}}};
    return {r.dump(), 2};
  }
  auto r = app::run_command(command, p, {seed, tol, samples});
  return {r.report.dump(), r.exit_code};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact gl_N XXX and Gaudin Bethe ansatz checks";
  py::register_exception<Error>(m, "BetheError", PyExc_ValueError);

  m.def("commands", &app::command_names);
  m.def("run_json", &run_json, py::arg("command"), py::arg("problem"), py::arg("seed") = py::none(),
        py::arg("tol") = py::none(), py::arg("samples") = py::none());
  m.def(
      "rational_R", [](int N, const std::string& u) { return to_strings(rational_R<Rational>(N, parse_rational(u))); },
      py::arg("N"), py::arg("u"));
  m.def(
      "fused_R",
      [](int N, int k, int l, const std::string& u) { return to_strings(fused_R(N, k, l, parse_rational(u))); },
      py::arg("N"), py::arg("k"), py::arg("l"), py::arg("u"));
  m.def(
      "transfer_matrix",
      [](const std::string& problem, int k) {
        auto p = app::parse_problem(app::json::parse(problem));
        auto c = Chain<Rational>::from_modules(p.modules, p.z);
        return to_strings(transfer_matrix(c, p.twist, k, p.u));
      },
      py::arg("problem"), py::arg("k"));
}
