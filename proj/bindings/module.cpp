#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "streamsub/cli.hpp"
#include "streamsub/generator.hpp"
#include "streamsub/instance.hpp"
#include "streamsub/lemma_suite.hpp"
#include "streamsub/offline.hpp"

namespace py = pybind11;
using namespace streamsub;

namespace {

// All payloads cross the boundary as JSON text: the file formats are already
// JSON, and strings keep the module free of custom converters.

std::string run_json(const std::string& function_json,
                     const std::string& constraint_json,
                     const std::string& options_json) {
  return run_from_json(Json::parse(function_json),
                       Json::parse(constraint_json),
                       Json::parse(options_json))
      .dump(2);
}

py::tuple generate_json(const std::string& kind, int n, int k,
                        std::uint64_t seed) {
  const GeneratedInstance gen = generate_instance(kind, n, k, seed);
  return py::make_tuple(gen.function.dump(2), gen.constraint.dump(2),
                        gen.warning);
}

std::string exact_json(const std::string& function_json,
                       const std::string& constraint_json) {
  InstanceBundle b = make_bundle(function_from_json(Json::parse(function_json)),
                                 matchoid_from_json(Json::parse(constraint_json)));
  InstrumentedOracle oracle(*b.fn, true);
  const OfflineResult r = exact_bruteforce(oracle, b.matchoid, b.universe);
  return Json{{"ids", r.ids}, {"value", r.value}}.dump(2);
}

std::string selftest_json(int instances_per_class, std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.instances_per_class = instances_per_class;
  cfg.seed = seed;
  const SuiteResult r = check_lemma_suite(cfg);
  Json lemmas = Json::object();
  for (const auto& [name, c] : r.ledger)
    lemmas[name] = Json{{"checked", c.checked}, {"violations", c.violations}};
  return Json{{"lemmas", lemmas},
              {"total_checked", r.total_checked()},
              {"total_violations", r.total_violations()}}
      .dump(2);
}

}  // namespace

PYBIND11_MODULE(streamsub_py, m) {
  m.doc() =
      "Single-pass streaming submodular maximization under p-matchoid "
      "constraints (JSON-string interface)";
  m.def("run", &run_json, py::arg("function_json"), py::arg("constraint_json"),
        py::arg("options_json") = "{}",
        "Run one algorithm configuration; returns the run report as JSON");
  m.def("generate", &generate_json, py::arg("kind"), py::arg("n"),
        py::arg("k"), py::arg("seed") = 0,
        "Generate an instance; returns (function_json, constraint_json, "
        "warning)");
  m.def("exact", &exact_json, py::arg("function_json"),
        py::arg("constraint_json"),
        "Exact optimum by pruned enumeration (<= 16 elements)");
  m.def("selftest", &selftest_json, py::arg("instances_per_class") = 5,
        py::arg("seed") = 1, "Run the property suite; returns a JSON summary");
  m.def("generator_kinds", [] { return generator_kinds(); },
        "Supported instance families");
  m.def("cli", &run_cli, py::arg("args"),
        "Invoke the command-line interface in-process");
}
