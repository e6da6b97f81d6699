#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simpcodes/analysis.hpp"

namespace simpcodes {

// One self-check battery: how many comparisons ran and every one that
// disagreed.  Empty mismatch list is the pass condition.
struct VerifySummary {
  std::string what;
  uint64_t checks = 0;
  std::vector<Discrepancy> mismatches;
  bool ok() const { return mismatches.empty(); }
};

std::string describe_spec(const DefiningSetSpec& spec);

struct SweepConfig {
  std::vector<int> ms = {3, 4};
  int trials = 20;  // per (case, m)
  uint64_t seed = 2024;
  std::vector<int> cases = {1, 2, 3, 4, 5, 6, 7, 8};
  Budgets budgets;
};

// Random proper nonempty L, M, N per trial; the three weight-distribution
// paths must agree message for message.  Also cross-checks the predicted
// code size against the enumerated kernel.
VerifySummary verify_tables(const SweepConfig& config);

// Every closed-form counting part against its predicate enumeration; parts
// that fix a vector v run over every admissible v, which doubles as the
// check that the count does not depend on the choice.
VerifySummary verify_counting(int m_max, int trials, uint64_t seed);

// Character sums in closed form against the literal member-by-member sum,
// for every generator subset (empty and full included), both plain and
// complemented, and every character.
VerifySummary verify_charsum(int m_max);

// Inclusion-exclusion size of random multi-face complexes against direct
// enumeration.
VerifySummary verify_generating(int m_max, int trials, uint64_t seed);

}  // namespace simpcodes
