#include "pfpos/classifier.hpp"
#include "pfpos/prover.hpp"
#include "pfpos/region.hpp"
#include "pfpos/spec_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pfpos;

namespace {

Verdict run_prover(const SequenceSpec& s, const std::string& algorithm, long max_iter) {
  validate_spec(s);
  if (algorithm == "gk") return prove_gk(s, max_iter);
  if (algorithm == "mu") return prove_mu(s, max_iter);
  if (algorithm == "order1") return order1_decide(s);
  if (algorithm == "auto") return prove_auto(s, max_iter);
  throw std::invalid_argument("algorithm must be one of gk, mu, order1, auto");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact positivity proofs for P-finite sequences";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnderdeterminedError>(m, "UnderdeterminedError", PyExc_ValueError);

  py::class_<SequenceSpec>(m, "Spec")
      .def_property_readonly("order", [](const SequenceSpec& s) { return s.rec.order(); })
      .def_property_readonly("initial_values",
                             [](const SequenceSpec& s) {
                               std::vector<std::string> out;
                               for (const auto& v : s.initial_values) out.push_back(v.get_str());
                               return out;
                             })
      .def("to_text", [](const SequenceSpec& s) { return to_text(s); })
      .def("to_json", [](const SequenceSpec& s) { return to_json(s).dump(); })
      .def("__repr__", [](const SequenceSpec& s) { return "<Spec order " + std::to_string(s.rec.order()) + ">"; });

  m.def("parse_spec", [](const std::string& text) { return parse_spec(text); }, py::arg("text"));
  m.def("remark_spec", [](const std::string& u, long n0) { return gen_remark_spec(parse_rational(u), n0); }, py::arg("u"),
        py::arg("n0"));
  m.def("eval_term", [](const SequenceSpec& s, long n) { return eval_sequence(s, n).get_str(); }, py::arg("spec"),
        py::arg("n"));

  m.def(
      "prove_json",
      [](const SequenceSpec& s, const std::string& algorithm, long max_iter) {
        Verdict v = [&] {
          py::gil_scoped_release release;
          return run_prover(s, algorithm, max_iter);
        }();
        nlohmann::json j = to_json(v);
        j["verified"] = v.status == Status::True ? verify_certificate(s, v) : false;
        return j.dump();
      },
      py::arg("spec"), py::arg("algorithm") = "auto", py::arg("max_iter") = 50);

  m.def("classify_json", [](const SequenceSpec& s) { return to_json(classify(s)).dump(); }, py::arg("spec"));

  m.def("cfinite_phi", [](const std::string& u, const std::string& v, int rho) {
    return cfinite_phi(parse_rational(u), parse_rational(v), rho);
  });
  m.def(
      "map_region_json",
      [](const std::string& step, int rho_max) {
        std::vector<RegionMapRow> rows;
        {
          py::gil_scoped_release release;
          rows = map_region(parse_rational(step), rho_max);
        }
        return to_json(rows).dump();
      },
      py::arg("grid_step"), py::arg("rho_max"));
  m.def("coverage_fraction", [](const std::string& step) { return coverage_fraction(parse_rational(step)).get_str(); });

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
}
