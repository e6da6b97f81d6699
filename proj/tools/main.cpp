#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "simpcodes/golden.hpp"
#include "simpcodes/report.hpp"
#include "simpcodes/verify.hpp"
#include "simpcodes/version.hpp"

namespace {

using simpcodes::AnalyzeOptions;
using simpcodes::BitVec;
using simpcodes::Budgets;
using simpcodes::DefiningSetSpec;
using simpcodes::InvalidSpecError;

// Everything a run can configure.  Sources are layered: defaults, then a
// JSON config file (keys named after the long flags), then environment
// budget overrides, then explicit flags.
struct JobConfig {
  int m = 0;
  std::vector<int> L, M, N;
  bool comp_l = false, comp_m = false, comp_n = false;
  std::string method = "all";
  std::string level = "codeword";
  std::string out;
  std::string format = "json";
  uint64_t seed = 2024;
  int trials = 20;
  std::vector<int> ms = {3, 4};
  std::vector<int> cases = {1, 2, 3, 4, 5, 6, 7, 8};
  int counting_m_max = 5;
  int counting_trials = 13;
  int charsum_m_max = 4;
  int generating_m_max = 6;
  int generating_trials = 25;
  std::vector<std::string> only;
  std::optional<int> budget_log2;
  Budgets budgets;
  bool with_generator = false;
  std::string generator_out;
};

void apply_config_file(JobConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpecError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpecError("config file " + path + ": " + e.what());
  }
  auto grab = [&j](const char* key, auto& slot) {
    if (j.contains(key)) slot = j.at(key).template get<std::decay_t<decltype(slot)>>();
  };
  grab("m", cfg.m);
  grab("L", cfg.L);
  grab("M", cfg.M);
  grab("N", cfg.N);
  grab("comp-L", cfg.comp_l);
  grab("comp-M", cfg.comp_m);
  grab("comp-N", cfg.comp_n);
  grab("method", cfg.method);
  grab("level", cfg.level);
  grab("out", cfg.out);
  grab("format", cfg.format);
  grab("seed", cfg.seed);
  grab("trials", cfg.trials);
  grab("ms", cfg.ms);
  grab("cases", cfg.cases);
  grab("counting-m-max", cfg.counting_m_max);
  grab("counting-trials", cfg.counting_trials);
  grab("charsum-m-max", cfg.charsum_m_max);
  grab("generating-m-max", cfg.generating_m_max);
  grab("generating-trials", cfg.generating_trials);
  grab("only", cfg.only);
  grab("with-generator", cfg.with_generator);
  grab("generator-out", cfg.generator_out);
  if (j.contains("budget-log2")) cfg.budget_log2 = j.at("budget-log2").get<int>();
}

void apply_env(Budgets& budgets) {
  auto grab = [](const char* name, uint64_t& slot) {
    if (const char* v = std::getenv(name)) slot = std::stoull(v);
  };
  grab("SIMPCODES_MAX_DEFINING_SET", budgets.max_defining_set);
  grab("SIMPCODES_MAX_MESSAGES", budgets.max_messages);
  grab("SIMPCODES_MAX_WEIGHT_OPS", budgets.max_weight_ops);
  grab("SIMPCODES_MAX_CODEWORDS_EXACT", budgets.max_codewords_exact);
  if (const char* v = std::getenv("SIMPCODES_THREADS"))
    budgets.threads = std::stoi(v);
}

void apply_budget_log2(JobConfig& cfg) {
  if (!cfg.budget_log2) return;
  const int k = *cfg.budget_log2;
  if (k < 1 || k > 62) throw InvalidSpecError("budget-log2 outside [1, 62]");
  cfg.budgets.max_messages = uint64_t{1} << k;
  cfg.budgets.max_codewords_exact = uint64_t{1} << k;
}

DefiningSetSpec spec_from(const JobConfig& cfg) {
  if (cfg.m < 1) throw InvalidSpecError("m must be given and positive");
  return DefiningSetSpec(cfg.m, BitVec::from_indices(cfg.m, cfg.L),
                         BitVec::from_indices(cfg.m, cfg.M),
                         BitVec::from_indices(cfg.m, cfg.N), cfg.comp_l,
                         cfg.comp_m, cfg.comp_n);
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InvalidSpecError("cannot open output file " + out);
  f << text;
}

int cmd_analyze(const JobConfig& cfg) {
  const DefiningSetSpec spec = spec_from(cfg);
  AnalyzeOptions options;
  options.method = simpcodes::method_from_string(cfg.method);
  options.budgets = cfg.budgets;
  options.with_generator_matrix = cfg.with_generator;
  const simpcodes::AnalysisReport rep = simpcodes::analyze(spec, options);

  if (cfg.format == "json") {
    write_output(cfg.out, simpcodes::report_to_json(rep));
  } else if (cfg.format == "csv") {
    const auto& dist = cfg.level == "message" ? rep.message_dist
                                              : rep.codeword_dist;
    write_output(cfg.out, simpcodes::distribution_csv(dist));
  } else {
    throw InvalidSpecError("format must be json or csv");
  }

  if (!cfg.generator_out.empty()) {
    std::string text;
    for (const simpcodes::Bits& row :
         simpcodes::CodeHandle::build(spec, cfg.budgets)
             .gray_generator_matrix())
      text += row.to_string() + "\n";
    write_output(cfg.generator_out, text);
  }
  return rep.discrepancies.empty() ? 0 : 1;
}

bool battery_selected(const JobConfig& cfg, const char* name) {
  if (cfg.only.empty()) return true;
  for (const auto& s : cfg.only)
    if (s == name) return true;
  return false;
}

int cmd_verify(const JobConfig& cfg) {
  std::vector<simpcodes::VerifySummary> summaries;
  if (battery_selected(cfg, "tables")) {
    simpcodes::SweepConfig sweep;
    sweep.ms = cfg.ms;
    sweep.trials = cfg.trials;
    sweep.seed = cfg.seed;
    sweep.cases = cfg.cases;
    sweep.budgets = cfg.budgets;
    summaries.push_back(simpcodes::verify_tables(sweep));
  }
  if (battery_selected(cfg, "counting"))
    summaries.push_back(simpcodes::verify_counting(
        cfg.counting_m_max, cfg.counting_trials, cfg.seed));
  if (battery_selected(cfg, "charsum"))
    summaries.push_back(simpcodes::verify_charsum(cfg.charsum_m_max));
  if (battery_selected(cfg, "generating"))
    summaries.push_back(simpcodes::verify_generating(
        cfg.generating_m_max, cfg.generating_trials, cfg.seed));

  bool all_ok = true;
  for (const auto& s : summaries) {
    std::cout << "[" << s.what << "] " << s.checks << " checks, "
              << s.mismatches.size() << " mismatches"
              << (s.ok() ? "" : "  FAIL") << "\n";
    for (const auto& mm : s.mismatches)
      std::cout << "  " << mm.kind << ": " << mm.detail << "\n";
    all_ok = all_ok && s.ok();
  }
  return all_ok ? 0 : 1;
}

int cmd_reproduce(const JobConfig& cfg) {
  AnalyzeOptions options;
  options.method = simpcodes::method_from_string(cfg.method);
  options.budgets = cfg.budgets;
  const auto results = simpcodes::reproduce_references(options);

  bool all_ok = true;
  std::string json_out;
  for (const auto& res : results) {
    std::cout << "[" << res.name << "] "
              << (res.ok ? "ok" : "MISMATCH");
    if (!res.flagged.empty()) std::cout << "  (known divergence flagged)";
    std::cout << "\n";
    for (const auto& d : res.mismatches)
      std::cout << "  " << d.kind << ": " << d.detail << "\n";
    for (const auto& d : res.flagged)
      std::cout << "  flagged " << d.kind << ": " << d.detail << "\n";
    all_ok = all_ok && res.ok;
    if (!cfg.out.empty()) json_out += simpcodes::report_to_json(res.report);
  }
  if (!cfg.out.empty()) write_output(cfg.out, json_out);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defining-set code analyzer over Z2[u]/(u^3-u)"};
  app.set_version_flag("--version", std::string(simpcodes::kVersion));
  app.require_subcommand(1);

  JobConfig cfg;
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path,
                    "JSON config file; explicit flags override it");
    sub->add_option("--seed", cfg.seed, "RNG seed for sweeps");
    sub->add_option("--max-messages", cfg.budgets.max_messages,
                    "full-enumeration message budget");
    sub->add_option("--max-codewords", cfg.budgets.max_codewords_exact,
                    "exact-minimality codeword budget");
    sub->add_option("--budget-log2", cfg.budget_log2,
                    "set both enumeration budgets to 2^K");
    sub->add_option("--threads", cfg.budgets.threads,
                    "worker threads (0 = hardware)");
  };

  CLI::App* an = app.add_subcommand(
      "analyze", "Analyze one defining-set configuration");
  add_common(an);
  an->add_option("--m", cfg.m, "ambient dimension m");
  an->add_option("--L", cfg.L, "generator of the first factor, 1-based")
      ->delimiter(',');
  an->add_option("--M", cfg.M, "generator of the second factor, 1-based")
      ->delimiter(',');
  an->add_option("--N", cfg.N, "generator of the third factor, 1-based")
      ->delimiter(',');
  an->add_flag("--comp-L", cfg.comp_l, "use the complement of the L complex");
  an->add_flag("--comp-M", cfg.comp_m, "use the complement of the M complex");
  an->add_flag("--comp-N", cfg.comp_n, "use the complement of the N complex");
  an->add_option("--method", cfg.method, "brute | charsum | table | all");
  an->add_option("--level", cfg.level,
                 "message | codeword (csv output level)");
  an->add_option("--out", cfg.out, "output path (default stdout)");
  an->add_option("--format", cfg.format, "json | csv");
  an->add_flag("--with-generator", cfg.with_generator,
               "embed the generator matrix in the JSON report");
  an->add_option("--generator-out", cfg.generator_out,
                 "write the generator matrix as 0/1 text rows");

  CLI::App* ver = app.add_subcommand(
      "verify-tables",
      "Random sweeps: closed forms against independent evaluators");
  add_common(ver);
  ver->add_option("--ms", cfg.ms, "m values for the table sweep")
      ->delimiter(',');
  ver->add_option("--trials", cfg.trials, "trials per (case, m)");
  ver->add_option("--cases", cfg.cases, "complement patterns to sweep")
      ->delimiter(',');
  ver->add_option("--counting-m-max", cfg.counting_m_max,
                  "largest m for the counting battery");
  ver->add_option("--counting-trials", cfg.counting_trials,
                  "subset triples per m in the counting battery");
  ver->add_option("--charsum-m-max", cfg.charsum_m_max,
                  "largest m for the character-sum battery");
  ver->add_option("--generating-m-max", cfg.generating_m_max,
                  "largest m for the generating-function battery");
  ver->add_option("--generating-trials", cfg.generating_trials,
                  "random complexes per m");
  ver->add_option("--only", cfg.only,
                  "run a subset: tables,counting,charsum,generating")
      ->delimiter(',');

  CLI::App* rep = app.add_subcommand(
      "reproduce-examples",
      "Re-run the stored reference configurations and compare");
  add_common(rep);
  rep->add_option("--method", cfg.method, "brute | charsum | table | all");
  rep->add_option("--out", cfg.out, "write the JSON reports to this path");

  try {
    // Pass 1 learns --config (and surfaces usage errors); the merged
    // defaults + file + env state is then laid down and pass 2 lets any
    // explicit flag win on top of it.
    app.parse(argc, argv);
    JobConfig layered;
    if (!config_path.empty()) apply_config_file(layered, config_path);
    apply_env(layered.budgets);
    cfg = layered;
    app.clear();
    app.parse(argc, argv);
    apply_budget_log2(cfg);

    if (an->parsed()) return cmd_analyze(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
    if (rep->parsed()) return cmd_reproduce(cfg);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const simpcodes::BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvalidSpecError& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
