#include "simpcodes/golden.hpp"

#include <algorithm>

namespace simpcodes {

namespace {

using Entries = std::vector<std::pair<uint64_t, uint64_t>>;

DefiningSetSpec spec_of(int m, std::vector<int> l, std::vector<int> mm,
                        std::vector<int> n, bool cl, bool cm, bool cn) {
  return DefiningSetSpec(m, BitVec::from_indices(m, l),
                         BitVec::from_indices(m, mm),
                         BitVec::from_indices(m, n), cl, cm, cn);
}

std::vector<ReferenceCase> make_references() {
  std::vector<ReferenceCase> refs;

  {
    ReferenceCase r;
    r.name = "reference-1";
    r.spec = spec_of(5, {1, 2}, {2, 3}, {3, 4}, false, false, false);
    r.n = 192;
    r.k = 7;
    r.d = 64;
    r.kernel = 256;
    r.distinct_nonzero = 2;
    r.codeword_entries = {{0, 1}, {64, 9}, {96, 118}};
    r.attested_terms = r.codeword_entries;
    refs.push_back(std::move(r));
  }
  {
    ReferenceCase r;
    r.name = "reference-2";
    r.spec = spec_of(5, {1, 2, 3}, {2, 3}, {3, 4}, true, false, false);
    r.n = 1152;
    r.k = 10;
    r.d = 384;
    r.kernel = 32;
    r.distinct_nonzero = 4;
    r.codeword_entries = {{0, 1}, {384, 9}, {576, 984}, {640, 27}, {768, 3}};
    r.attested_terms = r.codeword_entries;
    refs.push_back(std::move(r));
  }
  {
    ReferenceCase r;
    r.name = "reference-3";
    r.spec = spec_of(5, {1, 2, 3}, {2, 3}, {2, 3, 4}, false, true, false);
    r.n = 5376;
    r.k = 13;
    r.d = 1792;
    r.kernel = 4;
    r.distinct_nonzero = 5;
    r.codeword_entries = {{0, 1},       {1792, 24}, {2048, 13},
                          {2688, 7936}, {2816, 200}, {3072, 18}};
    r.attested_terms = r.codeword_entries;
    refs.push_back(std::move(r));
  }
  {
    ReferenceCase r;
    r.name = "reference-4";
    r.spec = spec_of(4, {1, 2, 3}, {1, 2}, {2, 3}, false, false, true);
    r.n = 1152;
    r.k = 9;
    r.d = 384;
    r.kernel = 8;
    r.distinct_nonzero = 4;
    r.codeword_entries = {{0, 1}, {384, 14}, {512, 1}, {576, 492}, {640, 4}};
    r.attested_terms = r.codeword_entries;
    refs.push_back(std::move(r));
  }
  {
    ReferenceCase r;
    r.name = "reference-5";
    r.spec = spec_of(5, {1}, {2, 3}, {2, 3, 4}, true, true, false);
    r.n = 20160;
    r.k = 15;
    r.d = 6720;
    r.kernel = 1;
    r.distinct_nonzero = 10;
    r.codeword_entries = {{0, 1},        {6720, 24},   {7680, 13},
                          {9984, 270},   {10048, 3000}, {10080, 28672},
                          {10240, 195},  {10304, 360},  {10560, 200},
                          {10752, 15},   {11520, 18}};
    r.attested_terms = r.codeword_entries;
    refs.push_back(std::move(r));
  }
  {
    ReferenceCase r;
    r.name = "reference-6";
    r.spec = spec_of(5, {1, 2}, {3}, {2, 3, 4}, true, true, false);
    r.n = 20160;
    r.k = 15;
    r.d = 6720;
    r.kernel = 1;
    r.distinct_nonzero = 10;
    r.codeword_entries = {{0, 1},        {6720, 16},   {7168, 21},
                          {9984, 294},   {10048, 3024}, {10080, 28672},
                          {10304, 432},  {10496, 147},  {10560, 112},
                          {10752, 42},   {11520, 7}};
    r.attested_terms = r.codeword_entries;
    refs.push_back(std::move(r));
  }
  {
    ReferenceCase r;
    r.name = "reference-7";
    r.spec = spec_of(4, {1}, {2, 3}, {1, 3}, true, false, true);
    r.n = 2016;
    r.k = 10;
    r.d = 672;
    r.kernel = 4;
    r.distinct_nonzero = 8;
    r.codeword_entries = {{0, 1},     {672, 14},  {896, 1},
                          {992, 28},  {1008, 864}, {1024, 7},
                          {1056, 98}, {1120, 4},   {1152, 7}};
    // Attested terms total 4093: not a power of 2, so no linear code has
    // this as a distribution at either level.  Every nonzero term equals
    // the message-level count; the zero-weight term does not (the kernel
    // forces 4).
    r.attested_terms = {{0, 1},     {672, 56},   {896, 4},
                        {992, 112}, {1008, 3456}, {1024, 28},
                        {1056, 392}, {1120, 16},  {1152, 28}};
    r.attested_level = Level::message;
    r.note =
        "attested zero-weight coefficient 1 undercounts the kernel-forced "
        "value 4; coefficient total 4093 is not a power of 2";
    refs.push_back(std::move(r));
  }
  return refs;
}

}  // namespace

const std::vector<ReferenceCase>& reference_cases() {
  static const std::vector<ReferenceCase> refs = make_references();
  return refs;
}

std::vector<ReproduceResult> reproduce_references(
    const AnalyzeOptions& options) {
  std::vector<ReproduceResult> results;
  for (const ReferenceCase& ref : reference_cases()) {
    ReproduceResult res;
    res.name = ref.name;
    res.report = analyze(ref.spec, options);
    const AnalysisReport& rep = res.report;

    auto expect = [&res](bool cond, const std::string& what) {
      if (!cond) res.mismatches.push_back({"reference_mismatch", what});
    };
    expect(rep.gray_length == ref.n,
           "n: got " + std::to_string(rep.gray_length) + ", expected " +
               std::to_string(ref.n));
    expect(rep.dimension == ref.k,
           "k: got " + std::to_string(rep.dimension) + ", expected " +
               std::to_string(ref.k));
    expect(rep.min_distance && *rep.min_distance == ref.d,
           "d: got " +
               (rep.min_distance ? std::to_string(*rep.min_distance)
                                 : std::string("none")) +
               ", expected " + std::to_string(ref.d));
    expect(rep.kernel == ref.kernel,
           "kernel: got " + std::to_string(rep.kernel) + ", expected " +
               std::to_string(ref.kernel));
    expect(rep.distinct_nonzero_weights == ref.distinct_nonzero,
           "distinct nonzero weights: got " +
               std::to_string(rep.distinct_nonzero_weights) + ", expected " +
               std::to_string(ref.distinct_nonzero));
    if (rep.codeword_dist.entries != ref.codeword_entries) {
      WeightDistribution frozen;
      frozen.level = Level::codeword;
      frozen.entries = ref.codeword_entries;
      res.mismatches.push_back(
          {"reference_mismatch", "codeword distribution: " +
                                     first_difference(rep.codeword_dist,
                                                      frozen)});
    }

    const WeightDistribution& computed = ref.attested_level == Level::message
                                             ? rep.message_dist
                                             : rep.codeword_dist;
    if (computed.entries != ref.attested_terms) {
      WeightDistribution attested;
      attested.level = ref.attested_level;
      attested.entries = ref.attested_terms;
      Discrepancy rec{"attested_divergence",
                      "computed vs attested: " +
                          first_difference(computed, attested)};
      if (ref.note.empty())
        res.mismatches.push_back(std::move(rec));
      else
        res.flagged.push_back(std::move(rec));
    } else if (!ref.note.empty()) {
      res.mismatches.push_back(
          {"reference_mismatch",
           "attested record marked divergent yet matched; the note is stale"});
    }

    for (const Discrepancy& d : rep.discrepancies)
      res.mismatches.push_back(d);
    res.ok = res.mismatches.empty();
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace simpcodes
