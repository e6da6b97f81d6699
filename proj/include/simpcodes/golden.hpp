#pragma once

#include <string>
#include <vector>

#include "simpcodes/analysis.hpp"

namespace simpcodes {

// A stored worked configuration with its independently checked outcome.
// `codeword_entries` is the arbiter-backed distribution; `attested_terms`
// is the enumerator as recorded externally, kept separate so a divergence
// is reported instead of silently corrected.  A nonempty `note` marks an
// attested record already known to be internally inconsistent.
struct ReferenceCase {
  std::string name;
  DefiningSetSpec spec;
  uint64_t n = 0;
  int k = 0;
  uint64_t d = 0;
  uint64_t kernel = 0;
  int distinct_nonzero = 0;
  std::vector<std::pair<uint64_t, uint64_t>> codeword_entries;
  std::vector<std::pair<uint64_t, uint64_t>> attested_terms;
  Level attested_level = Level::codeword;
  std::string note;
};

const std::vector<ReferenceCase>& reference_cases();

struct ReproduceResult {
  std::string name;
  bool ok = false;                        // frozen expectations all met
  std::vector<Discrepancy> mismatches;    // failures
  std::vector<Discrepancy> flagged;       // expected attested divergences
  AnalysisReport report;
};

// Re-analyzes every reference configuration and compares against the
// frozen values.  An attested record that disagrees with the computed
// distribution is a failure unless the case carries a note saying the
// divergence is established; then it lands in `flagged`.
std::vector<ReproduceResult> reproduce_references(
    const AnalyzeOptions& options = {});

}  // namespace simpcodes
