#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "grkoszul/cli.hpp"
#include "grkoszul/coxeter.hpp"
#include "grkoszul/errors.hpp"
#include "grkoszul/formats.hpp"
#include "grkoszul/koszul.hpp"
#include "grkoszul/models.hpp"
#include "grkoszul/selftest.hpp"
#include "grkoszul/weightpoly.hpp"

namespace py = pybind11;
using namespace grk;

namespace {

// "model:<name>" or a path to a .qalg file
QuiverPresentation load(const std::string& spec) {
  if (spec.rfind("model:", 0) == 0) return models::by_name(spec.substr(6));
  return parse_qalg(read_file(spec), spec);
}

py::dict koszul(const std::string& spec, int max_degree, unsigned jobs) {
  auto r = koszul_check(build_algebra(load(spec)), max_degree, jobs);
  py::dict d;
  d["koszul"] = r.koszul;
  d["exact"] = r.exact;
  d["gldim"] = r.gldim ? py::cast(*r.gldim) : py::none();
  d["witness"] = r.witness;
  d["summary"] = r.summary();
  return d;
}

// {(x, w): [c0, c1, ...]} with coefficients of q^k, x <= w only
py::dict kl(char type, int rank, long e, int max_length, bool inverse) {
  CoxeterTable ct(root_datum(type, rank), e, max_length);
  auto t = kl_tables(ct);
  const auto& polys = inverse ? t.q : t.p;
  py::dict d;
  for (std::size_t w = 0; w < ct.size(); ++w)
    for (std::size_t x = 0; x < ct.size(); ++x)
      if (ct.leq(static_cast<int>(x), static_cast<int>(w)))
        d[py::make_tuple(ct.word(static_cast<int>(x)), ct.word(static_cast<int>(w)))] = polys[x][w].q_coeffs();
  return d;
}

std::vector<std::vector<std::pair<Weight, long long>>> layers(char type, int rank, long e, const Weight& lambda) {
  return predict_layers(root_datum(type, rank), e, lambda).layers();
}

py::tuple run_args(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status;
  {
    py::gil_scoped_release release;
    status = run_cli(args, out, err);
  }
  return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_grkoszul, m) {
  m.attr("__version__") = "0.1.0";
  m.def("run", &run_args, py::arg("args"),
        "Run the command line tool in process; returns (status, stdout, stderr).");
  m.def("koszul_check", &koszul, py::arg("algebra"), py::arg("max_degree") = 12, py::arg("jobs") = 1u,
        "algebra is 'model:<name>' or a .qalg path.");
  m.def("kl_table", &kl, py::arg("type"), py::arg("rank"), py::arg("e"), py::arg("max_length"),
        py::arg("inverse") = false);
  m.def("predict_layers", &layers, py::arg("type"), py::arg("rank"), py::arg("e"), py::arg("weight"));
  m.def("lcf_dimension", [](char type, int rank, long e, const Weight& lambda) {
    return lcf_character(root_datum(type, rank), e, lambda).dim;
  });
  m.def("selftest", [] {
    auto r = run_selftest();
    py::dict d;
    for (const auto& c : r.checks) d[py::str(c.name)] = c.pass;
    return d;
  });

  // translators are tried newest first, so the base class goes in first
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
}
