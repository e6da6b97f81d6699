#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simpcodes/spectra.hpp"
#include "simpcodes/tables.hpp"

namespace simpcodes {

// Sufficient condition: a binary linear code whose extreme nonzero weights
// satisfy w0 / w_inf > 1/2 is minimal.  Compared as 2 w0 > w_inf in
// integers.  Wants a codeword-level distribution with a nonzero weight.
bool ashikhmin_barg(const WeightDistribution& codeword_level);

struct MinimalityCheck {
  bool minimal = true;
  // A covering pair (v, v0): v nonzero, v != v0, Supp(v) inside Supp(v0).
  std::optional<std::pair<Bits, Bits>> witness;
};

// Definition-level check over an explicit list of binary codewords (the
// zero word may be present; it is skipped).
MinimalityCheck exact_minimality(const std::vector<Bits>& codewords);

// All distinct Gray-image codewords, enumerated as the span of a row
// basis of the generator matrix (one XOR per step in Gray-counter order).
std::vector<Bits> gray_codewords(const CodeHandle& code,
                                 const Budgets& budgets = {});

MinimalityCheck exact_minimality(const CodeHandle& code,
                                 const Budgets& budgets = {});

struct SelfOrthogonality {
  bool weights_mod4 = false;  // every nonzero weight divisible by 4
  bool gram_zero = false;     // all generator-row pairs meet evenly
};

SelfOrthogonality self_orthogonality(const CodeHandle& code,
                                     const WeightDistribution& codeword_level);

struct CodeParams {
  uint64_t n = 0;
  int k = 0;
  uint64_t d = 0;
};

// [n, k, d] of the Gray image; throws on the zero code (d undefined).
CodeParams code_params(const CodeHandle& code,
                       const WeightDistribution& codeword_level,
                       uint64_t code_size);

enum class Method { brute, charsum, table, all };

Method method_from_string(const std::string& s);
std::string method_name(Method m);

struct AnalyzeOptions {
  Method method = Method::all;
  Budgets budgets;
  bool with_generator_matrix = false;
};

struct Discrepancy {
  std::string kind;
  std::string detail;
};

struct AnalysisReport {
  DefiningSetSpec spec;
  int case_index = 0;
  uint64_t defining_set_size = 0;
  uint64_t gray_length = 0;
  uint64_t code_size = 0;
  uint64_t kernel = 0;
  int dimension = 0;
  std::optional<uint64_t> min_distance;
  std::optional<uint64_t> w0, w_inf;
  int distinct_nonzero_weights = 0;
  WeightDistribution message_dist, codeword_dist;
  std::string enumerator_str;
  std::vector<std::string> methods;
  std::optional<bool> ab_minimal;
  MinimalityRule table_rule;
  std::optional<bool> exact_minimal;
  SelfOrthogonality orthogonality;
  std::vector<Discrepancy> discrepancies;
  std::optional<std::vector<std::string>> generator_matrix;
};

// Full pipeline: build, enumerate by the requested method(s), compare when
// several run, then attach the minimality and orthogonality verdicts.
// With Method::all every mismatch lands in `discrepancies` instead of
// being silently absorbed.
AnalysisReport analyze(const DefiningSetSpec& spec,
                       const AnalyzeOptions& options = {});

}  // namespace simpcodes
