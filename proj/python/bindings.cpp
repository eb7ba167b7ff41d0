// Python bindings. Complexes and maps travel as text in the file format and
// results come back as JSON strings; the uchain package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uchain/error.hpp"
#include "uchain/homology.hpp"
#include "uchain/json_io.hpp"
#include "uchain/lefschetz.hpp"
#include "uchain/normal_form.hpp"
#include "uchain/text_format.hpp"

namespace py = pybind11;
using namespace uchain;

namespace {

ChainMap endomorphism(const GradedComplex& c, const std::string& map_text) { return parse_chain_map(map_text, c, c); }

std::string classify_json(const std::string& text) { return to_json(classify(parse_complex(text))).dump(); }

std::string homology_json(const std::string& text, const std::string& flavor) {
  GradedComplex c = parse_complex(text);
  return to_json(c, homology(c, parse_flavor(flavor))).dump();
}

int delta_quantity_value(const std::string& complex_text, const std::string& map_text, bool map_first, bool mutate) {
  GradedComplex c = parse_complex(complex_text);
  DeltaOptions options;
  options.order = map_first ? CompositionOrder::MapFirst : CompositionOrder::InverseFirst;
  options.replace_phi_dual_with_identity = mutate;
  return delta_quantity(c, endomorphism(c, map_text), options) ? 1 : 0;
}

std::string lefschetz_json(const std::string& complex_text, const std::string& map_text) {
  GradedComplex c = parse_complex(complex_text);
  LefschetzTrace t = lefschetz_trace(c, endomorphism(c, map_text));
  return Json{{"value", int(t.value)}, {"trace_even", int(t.even)}, {"trace_odd", int(t.odd)},
              {"h_plus_dimension", t.dimension}}
      .dump();
}

std::string verify_json(std::uint64_t seed, long long trials, int max_rank, int max_exponent, int jobs, bool mutate) {
  VerifyOptions o;
  o.campaign_seed = seed;
  o.trials = trials;
  o.max_rank = max_rank;
  o.max_exponent = max_exponent;
  o.jobs = jobs;
  o.delta.replace_phi_dual_with_identity = mutate;
  VerificationReport r;
  {
    py::gil_scoped_release release;
    r = verify_proposition(o);
  }
  return to_json(r).dump();
}

std::string les_json(const std::string& text) { return to_json(les_exactness_check(parse_complex(text))).dump(); }

std::string mapping_torus_json(const std::string& complex_text, const std::string& map_text) {
  GradedComplex c = parse_complex(complex_text);
  return to_json(mapping_torus_betti(c, endomorphism(c, map_text))).dump();
}

std::string realize_text(const std::vector<int>& one_steps, const std::vector<std::pair<int, int>>& two_steps) {
  NormalForm nf;
  nf.one_steps = one_steps;
  for (auto [g, n] : two_steps) nf.two_steps.push_back({g, n});
  nf.canonicalize();
  return format_complex(realize(nf));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "UChainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.kind())), e.detail());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("classify", &classify_json, py::arg("complex_text"));
  m.def("homology", &homology_json, py::arg("complex_text"), py::arg("flavor"));
  m.def("delta_quantity", &delta_quantity_value, py::arg("complex_text"), py::arg("map_text"),
        py::arg("map_first") = false, py::arg("mutate") = false);
  m.def("lefschetz", &lefschetz_json, py::arg("complex_text"), py::arg("map_text"));
  m.def("verify", &verify_json, py::arg("seed"), py::arg("trials"), py::arg("max_rank") = 8,
        py::arg("max_exponent") = 6, py::arg("jobs") = 1, py::arg("mutate") = false);
  m.def("les_check", &les_json, py::arg("complex_text"));
  m.def("mapping_torus", &mapping_torus_json, py::arg("complex_text"), py::arg("map_text"));
  m.def("realize", &realize_text, py::arg("one_steps"), py::arg("two_steps"));
  m.def("canonical_text", [](const std::string& text) { return format_complex(parse_complex(text)); },
        py::arg("complex_text"));
}
