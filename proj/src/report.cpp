#include "simpcodes/report.hpp"

#include <json.hpp>

#include "simpcodes/version.hpp"

namespace simpcodes {

namespace {

using json = nlohmann::ordered_json;

json entries_json(const WeightDistribution& d) {
  json arr = json::array();
  for (auto& [w, f] : d.entries) arr.push_back(json::array({w, f}));
  return arr;
}

json distribution_json(const WeightDistribution& d, const char* level) {
  return json{{"level", level}, {"entries", entries_json(d)}};
}

template <typename T>
json opt_json(const std::optional<T>& v) {
  if (v) return json(*v);
  return json(nullptr);
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep, int indent) {
  const auto& spec = rep.spec;
  json j;
  j["schema"] = kReportSchema;
  j["version"] = kVersion;
  j["spec"] = json{{"m", spec.m},
                   {"L", spec.L.indices()},
                   {"comp_L", spec.comp_l},
                   {"M", spec.M.indices()},
                   {"comp_M", spec.comp_m},
                   {"N", spec.N.indices()},
                   {"comp_N", spec.comp_n}};
  j["case"] = rep.case_index;
  j["defining_set_size"] = rep.defining_set_size;
  j["code"] = json{{"n", rep.gray_length},
                   {"k", rep.dimension},
                   {"d", opt_json(rep.min_distance)},
                   {"size", rep.code_size},
                   {"kernel", rep.kernel}};
  j["weights"] = json{{"w0", opt_json(rep.w0)},
                      {"w_inf", opt_json(rep.w_inf)},
                      {"distinct_nonzero", rep.distinct_nonzero_weights}};
  j["distribution"] =
      json{{"message", distribution_json(rep.message_dist, "message")},
           {"codeword", distribution_json(rep.codeword_dist, "codeword")}};
  j["enumerator"] = rep.enumerator_str;
  j["minimality"] =
      json{{"ashikhmin_barg", opt_json(rep.ab_minimal)},
           {"table_rule", json{{"applicable", rep.table_rule.applicable},
                               {"satisfied", rep.table_rule.satisfied},
                               {"w0", opt_json(rep.table_rule.w0)},
                               {"w_inf", opt_json(rep.table_rule.w_inf)},
                               {"detail", rep.table_rule.detail}}},
           {"exact", opt_json(rep.exact_minimal)}};
  j["self_orthogonality"] =
      json{{"weights_mod4", rep.orthogonality.weights_mod4},
           {"gram_zero", rep.orthogonality.gram_zero}};
  j["methods"] = rep.methods;
  json disc = json::array();
  for (const auto& d : rep.discrepancies)
    disc.push_back(json{{"kind", d.kind}, {"detail", d.detail}});
  j["discrepancies"] = disc;
  if (rep.generator_matrix) j["generator_matrix"] = *rep.generator_matrix;
  return j.dump(indent) + "\n";
}

}  // namespace simpcodes
