#include <vector>

#include "doctest.h"
#include "simpcodes/spectra.hpp"
#include "simpcodes/tables.hpp"

using namespace simpcodes;

namespace {

using Entries = std::vector<std::pair<uint64_t, uint64_t>>;

DefiningSetSpec worked_spec() {
  // m=5, L={1,2}, M={2,3}, N={3,4}, no complements.
  return DefiningSetSpec(5, BitVec::from_indices(5, {1, 2}),
                         BitVec::from_indices(5, {2, 3}),
                         BitVec::from_indices(5, {3, 4}));
}

DefiningSetSpec case_spec(int case_index) {
  // One representative per complement pattern at m=3.
  bool cl = case_index == 2 || case_index == 5 || case_index == 6 ||
            case_index == 8;
  bool cm = case_index == 3 || case_index == 5 || case_index == 7 ||
            case_index == 8;
  bool cn = case_index == 4 || case_index == 6 || case_index == 7 ||
            case_index == 8;
  return DefiningSetSpec(3, BitVec::from_indices(3, {1}),
                         BitVec::from_indices(3, {2, 3}),
                         BitVec::from_indices(3, {3}), cl, cm, cn);
}

}  // namespace

TEST_CASE("distribution accessors") {
  WeightDistribution d;
  d.level = Level::codeword;
  d.entries = {{0, 1}, {64, 9}, {96, 118}};
  CHECK(d.total() == 128);
  CHECK(d.min_nonzero_weight() == 64);
  CHECK(d.max_weight() == 96);
  CHECK(d.distinct_nonzero_weights() == 2);
  CHECK(d.has_nonzero_weight());

  WeightDistribution zero;
  zero.entries = {{0, 512}};
  CHECK(!zero.has_nonzero_weight());
  CHECK(zero.max_weight() == 0);
  CHECK_THROWS_AS(zero.min_nonzero_weight(), InvalidSpecError);
}

TEST_CASE("level conversion divides by the kernel") {
  WeightDistribution msg;
  msg.level = Level::message;
  msg.entries = {{0, 256}, {64, 2304}, {96, 30208}};
  auto cw = msg.to_codeword_level(256);
  CHECK(cw.level == Level::codeword);
  CHECK(cw.entries == Entries{{0, 1}, {64, 9}, {96, 118}});
  // A frequency not divisible by the kernel is a hard error.
  CHECK_THROWS_AS(msg.to_codeword_level(5), InvalidSpecError);
}

TEST_CASE("worked configuration: all three paths give the stored histogram") {
  auto spec = worked_spec();
  auto code = CodeHandle::build(spec);
  const Entries msg_level = {{0, 256}, {64, 2304}, {96, 30208}};
  const Entries cw_level = {{0, 1}, {64, 9}, {96, 118}};

  auto brute = brute_force_distribution(code);
  CHECK(brute.entries == msg_level);
  CHECK(brute.total() == uint64_t{1} << 15);

  auto cs = charsum_distribution(code);
  CHECK(cs.entries == msg_level);

  auto table = table_distribution(spec);
  CHECK(table.entries == msg_level);

  CHECK(code.kernel_size() == 256);
  auto cw = brute.to_codeword_level(code.kernel_size());
  CHECK(cw.entries == cw_level);
  CHECK(cw.total() == 128);

  CHECK(brute_force_distribution(code, Level::codeword).entries == cw_level);
  CHECK(charsum_distribution(code, Level::codeword).entries == cw_level);
}

TEST_CASE("three paths agree on one representative of every pattern") {
  for (int c = 1; c <= 8; ++c) {
    CAPTURE(c);
    auto spec = case_spec(c);
    REQUIRE(spec.case_index() == c);
    auto code = CodeHandle::build(spec);
    auto brute = brute_force_distribution(code);
    auto cs = charsum_distribution(code);
    auto table = table_distribution(spec);
    CHECK(first_difference(brute, cs) == "identical");
    CHECK(first_difference(brute, table) == "identical");
    CHECK(brute.total() == uint64_t{1} << 9);
    CHECK(table.total() == uint64_t{1} << 9);
    CHECK(code.kernel_size() * table_code_size(spec) == uint64_t{1} << 9);
    CHECK(table.distinct_nonzero_weights() <=
          advertised_weight_count(c));
  }
}

TEST_CASE("table path requires proper nonempty subsets") {
  DefiningSetSpec degenerate(3, BitVec(3, 0), BitVec(3, 3), BitVec(3, 1));
  CHECK_THROWS_AS(table_distribution(degenerate), InvalidSpecError);
}

TEST_CASE("enumerator rendering") {
  WeightDistribution cw;
  cw.level = Level::codeword;
  cw.entries = {{0, 1}, {64, 9}, {96, 118}};
  auto poly = enumerator(cw, 192);
  CHECK(poly.n == 192);
  CHECK(poly.to_string() == "X^192 + 9X^128Y^64 + 118X^96Y^96");

  WeightDistribution full;
  full.level = Level::codeword;
  full.entries = {{0, 1}, {4, 3}};
  CHECK(enumerator(full, 4).to_string() == "X^4 + 3Y^4");
}

TEST_CASE("csv rendering") {
  WeightDistribution d;
  d.entries = {{0, 1}, {64, 9}, {96, 118}};
  CHECK(distribution_csv(d) == "weight,frequency\n0,1\n64,9\n96,118\n");
}

TEST_CASE("first difference pinpoints the earliest disagreement") {
  WeightDistribution a, b;
  a.entries = {{0, 1}, {64, 9}, {96, 118}};
  b.entries = {{0, 1}, {64, 9}, {96, 118}};
  CHECK(first_difference(a, b) == "identical");

  b.entries[1].second = 10;
  CHECK(first_difference(a, b) == "weight 64: 9 vs 10");

  b.entries = {{0, 1}, {96, 118}};
  auto msg = first_difference(a, b);
  CHECK(msg.find("64") != std::string::npos);
  CHECK(msg.find("absent") != std::string::npos);
}
