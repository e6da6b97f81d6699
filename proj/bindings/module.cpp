#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simpcodes/golden.hpp"
#include "simpcodes/report.hpp"
#include "simpcodes/verify.hpp"
#include "simpcodes/version.hpp"

namespace py = pybind11;
using namespace simpcodes;

namespace {

RingElement elem(int code) {
  if (code < 0 || code > 7)
    throw InvalidSpecError("ring element code outside [0, 7]");
  return RingElement::from_code(uint8_t(code));
}

DefiningSetSpec make_spec(int m, const std::vector<int>& L,
                          const std::vector<int>& M,
                          const std::vector<int>& N, bool comp_l, bool comp_m,
                          bool comp_n) {
  return DefiningSetSpec(m, BitVec::from_indices(m, L),
                         BitVec::from_indices(m, M),
                         BitVec::from_indices(m, N), comp_l, comp_m, comp_n);
}

WeightDistribution run_distribution(const DefiningSetSpec& spec,
                                    const std::string& method,
                                    const std::string& level) {
  const Level lvl = level == "message" ? Level::message : Level::codeword;
  CodeHandle code = CodeHandle::build(spec);
  if (method == "brute") return brute_force_distribution(code, lvl);
  if (method == "charsum") return charsum_distribution(code, lvl);
  if (method == "table") {
    WeightDistribution d = table_distribution(spec);
    if (lvl == Level::codeword) d = d.to_codeword_level(code.kernel_size());
    return d;
  }
  throw InvalidSpecError("method must be brute, charsum or table");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "codes over Z2[u]/(u^3-u) from simplicial defining sets";
  mod.attr("__version__") = kVersion;

  py::register_exception<InvalidSpecError>(mod, "InvalidSpec",
                                           PyExc_ValueError);
  py::register_exception<BudgetExceededError>(mod, "BudgetExceeded",
                                              PyExc_RuntimeError);

  mod.def("ring_add", [](int a, int b) {
    return int((elem(a) + elem(b)).code());
  });
  mod.def("ring_mul", [](int a, int b) {
    return int((elem(a) * elem(b)).code());
  });
  mod.def("gray", [](int a) {
    const auto g = elem(a).gray();
    return py::make_tuple(int(g[0]), int(g[1]), int(g[2]));
  });
  mod.def("lee_weight", [](int a) { return elem(a).lee_weight(); });
  mod.def("ring_str", [](int a) { return elem(a).to_string(); });

  mod.def(
      "distribution",
      [](int m, const std::vector<int>& L, const std::vector<int>& M,
         const std::vector<int>& N, bool comp_L, bool comp_M, bool comp_N,
         const std::string& method, const std::string& level) {
        const auto dist = run_distribution(
            make_spec(m, L, M, N, comp_L, comp_M, comp_N), method, level);
        return dist.entries;
      },
      py::arg("m"), py::arg("L"), py::arg("M"), py::arg("N"),
      py::arg("comp_L") = false, py::arg("comp_M") = false,
      py::arg("comp_N") = false, py::arg("method") = "charsum",
      py::arg("level") = "codeword");

  mod.def(
      "code_params",
      [](int m, const std::vector<int>& L, const std::vector<int>& M,
         const std::vector<int>& N, bool comp_L, bool comp_M, bool comp_N) {
        const auto spec = make_spec(m, L, M, N, comp_L, comp_M, comp_N);
        AnalyzeOptions options;
        options.method = Method::charsum;
        const auto rep = analyze(spec, options);
        return py::make_tuple(rep.gray_length, rep.dimension,
                              rep.min_distance ? py::cast(*rep.min_distance)
                                               : py::none());
      },
      py::arg("m"), py::arg("L"), py::arg("M"), py::arg("N"),
      py::arg("comp_L") = false, py::arg("comp_M") = false,
      py::arg("comp_N") = false);

  mod.def(
      "analyze_json",
      [](int m, const std::vector<int>& L, const std::vector<int>& M,
         const std::vector<int>& N, bool comp_L, bool comp_M, bool comp_N,
         const std::string& method, bool with_generator) {
        AnalyzeOptions options;
        options.method = method_from_string(method);
        options.with_generator_matrix = with_generator;
        return report_to_json(
            analyze(make_spec(m, L, M, N, comp_L, comp_M, comp_N), options));
      },
      py::arg("m"), py::arg("L"), py::arg("M"), py::arg("N"),
      py::arg("comp_L") = false, py::arg("comp_M") = false,
      py::arg("comp_N") = false, py::arg("method") = "all",
      py::arg("with_generator") = false);

  mod.def(
      "verify_tables",
      [](const std::vector<int>& ms, int trials, uint64_t seed,
         const std::vector<int>& cases) {
        SweepConfig config;
        config.ms = ms;
        config.trials = trials;
        config.seed = seed;
        config.cases = cases;
        const auto sum = verify_tables(config);
        py::list mismatches;
        for (const auto& d : sum.mismatches)
          mismatches.append(py::make_tuple(d.kind, d.detail));
        py::dict out;
        out["checks"] = sum.checks;
        out["mismatches"] = mismatches;
        out["ok"] = sum.ok();
        return out;
      },
      py::arg("ms") = std::vector<int>{3}, py::arg("trials") = 5,
      py::arg("seed") = 2024,
      py::arg("cases") = std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});

  mod.def("reproduce_references", [](const std::string& method) {
    AnalyzeOptions options;
    options.method = method_from_string(method);
    py::list out;
    for (const auto& res : reproduce_references(options)) {
      py::dict d;
      d["name"] = res.name;
      d["ok"] = res.ok;
      py::list mm, fl;
      for (const auto& x : res.mismatches)
        mm.append(py::make_tuple(x.kind, x.detail));
      for (const auto& x : res.flagged)
        fl.append(py::make_tuple(x.kind, x.detail));
      d["mismatches"] = mm;
      d["flagged"] = fl;
      d["report"] = report_to_json(res.report);
      out.append(d);
    }
    return out;
  }, py::arg("method") = "all");

  mod.def("reference_names", [] {
    std::vector<std::string> names;
    for (const auto& r : reference_cases()) names.push_back(r.name);
    return names;
  });
}
