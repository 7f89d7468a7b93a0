#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "genrig/certificate.hpp"
#include "genrig/cli.hpp"
#include "genrig/decider.hpp"
#include "genrig/error.hpp"
#include "genrig/io.hpp"
#include "genrig/oracle.hpp"
#include "genrig/poly_text.hpp"
#include "genrig/straighten.hpp"
#include "genrig/stress.hpp"

namespace py = pybind11;
using namespace genrig;

// Everything crosses the boundary as JSON text; the Python side parses it.
namespace {

GraphFile load_graph(const std::string& text) { return graph_from_json(Json::parse(text)); }

int pick_dim(const GraphFile& f, int dim) {
  if (dim > 0) return dim;
  if (f.dim) return *f.dim;
  throw Error(ErrorKind::ParseError, "no dimension given and the graph has no \"d\"");
}

std::string oracle(const std::string& graph, int dim, std::uint64_t seed, int trials) {
  const GraphFile f = load_graph(graph);
  return to_json(oracle_decide(f.graph, pick_dim(f, dim), seed, trials)).dump();
}

std::string check(const std::string& graph, int dim, const std::string& mode, std::uint64_t seed, bool verify,
                  bool certified) {
  const GraphFile f = load_graph(graph);
  DecideOptions opt;
  if (mode == "search") opt.mode = DecisionMode::Search;
  else if (mode != "kernel") throw Error(ErrorKind::ParseError, "mode must be kernel or search");
  opt.seed = seed;
  opt.verify = verify;
  opt.balance = certified ? BalanceMode::Certified : BalanceMode::Probabilistic;
  return to_json(decide(f.graph, pick_dim(f, dim), opt)).dump();
}

std::string straighten_text(const std::string& text, std::size_t max_terms) {
  return format_polynomial(straighten(parse_polynomial(text), {max_terms}));
}

std::string balanced(const std::string& orientation, int dim, bool certified, std::uint64_t seed) {
  BalanceOptions opt;
  opt.mode = certified ? BalanceMode::Certified : BalanceMode::Probabilistic;
  opt.seed = seed;
  return to_json(is_balanced(orientation_from_json(Json::parse(orientation)), dim, opt)).dump();
}

std::string stress(const std::string& graph, const std::string& orientation, const std::string& sinks, int dim,
                   std::uint64_t seed) {
  const GraphFile f = load_graph(graph);
  const int d = pick_dim(f, dim);
  const SynthesisResult r = synthesize_at_random(f.graph, orientation_from_json(Json::parse(orientation)), d, seed,
                                                 sink_values_from_json(Json::parse(sinks)));
  return Json{{"seed", r.seed},
              {"w", to_json(r.stress)},
              {"residual", to_json(verify_stress(f.graph, r.placement, r.stress))},
              {"placement", placement_to_json(r.placement)}}
      .dump();
}

std::optional<std::string> certificate(const std::string& graph, int dim, std::uint64_t seed) {
  const GraphFile f = load_graph(graph);
  const auto gamma = certificate_from_kernel(f.graph, pick_dim(f, dim), seed);
  if (!gamma) return std::nullopt;
  return orientation_to_json(*gamma).dump();
}

std::string reduce(const std::string& graph, int dim, std::uint64_t seed) {
  const GraphFile f = load_graph(graph);
  const int d = pick_dim(f, dim);
  return graph_to_json(reduce_surplus(f.graph, d, seed), d).dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // leaked on purpose: the type lives as long as the interpreter
  static PyObject* error_type = PyErr_NewException("genrig._core.GenrigError", PyExc_RuntimeError, nullptr);
  m.add_object("GenrigError", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("oracle", &oracle, py::arg("graph"), py::arg("dim") = 0, py::arg("seed") = 0, py::arg("trials") = 3);
  m.def("check", &check, py::arg("graph"), py::arg("dim") = 0, py::arg("mode") = "kernel", py::arg("seed") = 0,
        py::arg("verify") = false, py::arg("certified") = false);
  m.def("straighten", &straighten_text, py::arg("text"), py::arg("max_terms") = 1'000'000);
  m.def("balanced", &balanced, py::arg("orientation"), py::arg("dim"), py::arg("certified") = false,
        py::arg("seed") = 0);
  m.def("stress", &stress, py::arg("graph"), py::arg("orientation"), py::arg("sinks"), py::arg("dim") = 0,
        py::arg("seed") = 0);
  m.def("certificate", &certificate, py::arg("graph"), py::arg("dim") = 0, py::arg("seed") = 0);
  m.def("reduce", &reduce, py::arg("graph"), py::arg("dim") = 0, py::arg("seed") = 0);
  m.def("run_cli", &cli, py::arg("args"));
}
