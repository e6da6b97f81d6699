#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simpcodes/construction.hpp"

namespace simpcodes {

// Closed-form Lee weight rows for the eight complement patterns, as
// (weight, frequency) pairs at message level: frequencies count messages
// x in R^m, so each column sums to 2^{3m}.  Requires L, M, N proper and
// nonempty.  Rows with equal weight are merged, zero frequencies dropped,
// and a negative merged frequency raises InvalidSpecError.
std::vector<std::pair<uint64_t, uint64_t>> table_rows(
    const DefiningSetSpec& spec);

// Advertised distinct-weight count for each pattern (an upper bound that
// specific parameters may reduce by weight collision).
int advertised_weight_count(int case_index);

// |C_D| predicted by the row tables.
uint64_t table_code_size(const DefiningSetSpec& spec);

// Sufficient-condition table for minimality of the Gray image.  The w0 /
// w_inf columns are the predicted extreme nonzero weights; `satisfied`
// asserts minimality.  For patterns with two sub-rows the one whose w_inf
// dominates is selected, matching the printed guards.
struct MinimalityRule {
  bool applicable = false;
  bool satisfied = false;
  std::optional<uint64_t> w0;
  std::optional<uint64_t> w_inf;
  std::string detail;  // which sub-row / guard fired
};

MinimalityRule minimality_rule(const DefiningSetSpec& spec);

}  // namespace simpcodes
