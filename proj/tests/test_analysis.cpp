#include <algorithm>
#include <set>

#include "doctest.h"
#include "simpcodes/analysis.hpp"

using namespace simpcodes;

namespace {

Bits word(std::initializer_list<int> bits) {
  Bits b(bits.size());
  size_t i = 0;
  for (int v : bits) b.set(i++, v != 0);
  return b;
}

DefiningSetSpec worked_spec() {
  return DefiningSetSpec(5, BitVec::from_indices(5, {1, 2}),
                         BitVec::from_indices(5, {2, 3}),
                         BitVec::from_indices(5, {3, 4}));
}

WeightDistribution cw_dist(std::vector<std::pair<uint64_t, uint64_t>> e) {
  WeightDistribution d;
  d.level = Level::codeword;
  d.entries = std::move(e);
  return d;
}

}  // namespace

TEST_CASE("minimality from extreme weights sits on a strict boundary") {
  CHECK(ashikhmin_barg(cw_dist({{0, 1}, {5, 3}, {9, 4}})));    // 10 > 9
  CHECK(!ashikhmin_barg(cw_dist({{0, 1}, {5, 3}, {10, 4}})));  // 10 = 10
  CHECK(!ashikhmin_barg(cw_dist({{0, 1}, {5, 3}, {11, 4}})));
  CHECK(ashikhmin_barg(cw_dist({{0, 1}, {7, 2}})));  // one nonzero weight
  CHECK_THROWS_AS(ashikhmin_barg(cw_dist({{0, 4}})), InvalidSpecError);
}

TEST_CASE("covering-pair search on explicit word lists") {
  // 100 is covered by 110: not minimal, and the witness says so.
  auto r = exact_minimality(
      {word({0, 0, 0}), word({1, 0, 0}), word({1, 1, 0}), word({0, 1, 0})});
  CHECK(!r.minimal);
  REQUIRE(r.witness.has_value());
  auto [inner, outer] = *r.witness;
  CHECK(inner.covered_by(outer));
  CHECK(inner.count() < outer.count());

  // Pairwise incomparable supports: minimal.
  auto ok = exact_minimality(
      {word({0, 0, 0}), word({1, 1, 0}), word({1, 0, 1}), word({0, 1, 1})});
  CHECK(ok.minimal);
  CHECK(!ok.witness.has_value());

  // The zero word never serves as a witness.
  CHECK(exact_minimality({word({0, 0, 0}), word({1, 0, 1})}).minimal);
  CHECK(exact_minimality({}).minimal);
}

TEST_CASE("span enumeration yields each codeword once") {
  auto code = CodeHandle::build(worked_spec());
  auto words = gray_codewords(code);
  const uint64_t expect =
      (uint64_t{1} << 15) / code.kernel_size();  // messages / kernel
  CHECK(words.size() == expect);
  std::set<std::string> seen;
  bool zero_found = false;
  for (auto& w : words) {
    CHECK(w.size() == code.gray_length());
    seen.insert(w.to_string());
    zero_found = zero_found || w.is_zero();
  }
  CHECK(seen.size() == words.size());
  CHECK(zero_found);

  Budgets tight;
  tight.max_codewords_exact = 16;
  CHECK_THROWS_AS(gray_codewords(code, tight), BudgetExceededError);
}

TEST_CASE("sufficient-condition table per pattern") {
  auto rule_of = [](int m, uint32_t l, uint32_t mm, uint32_t n, bool cl,
                    bool cm, bool cn) {
    return minimality_rule(
        DefiningSetSpec(m, BitVec(m, l), BitVec(m, mm), BitVec(m, n), cl, cm,
                        cn));
  };

  SUBCASE("pattern 1 is unconditional") {
    auto r = rule_of(3, 1, 3, 6, false, false, false);
    CHECK(r.applicable);
    CHECK(r.satisfied);
    CHECK(*r.w0 == 32);      // 2^{1+2+2}
    CHECK(*r.w_inf == 48);   // 3*2^{1+2+2-1}
  }

  SUBCASE("pattern 2 needs a small first subset") {
    CHECK(rule_of(4, 1, 3, 3, true, false, false).satisfied);  // 1 <= 1
    // At |L| = m-2 the predicted ratio is exactly 1/2: no certificate.
    auto r = rule_of(4, 3, 3, 3, true, false, false);
    CHECK(r.applicable);
    CHECK(!r.satisfied);
    CHECK(2 * *r.w0 == *r.w_inf);
  }

  SUBCASE("pattern 4 example values") {
    auto r = rule_of(3, 1, 1, 1, false, false, true);
    CHECK(r.applicable);
    CHECK(r.satisfied);  // 1 <= 1
    CHECK(*r.w0 == (8 - 2) * 4);
    CHECK(*r.w_inf == 2 * (3 * 8 - 4));  // generic bound, may overshoot
  }

  SUBCASE("pattern 6 has a genuine gap") {
    // Third subset much larger than the first, second nested inside it:
    // no sub-row applies.
    auto gap = rule_of(4, 1, 6, 7, true, false, true);
    CHECK(!gap.applicable);
    CHECK(!gap.satisfied);

    // Same shape but the second subset leaves the third: second sub-row.
    auto r2 = rule_of(4, 1, 3, 14, true, false, true);
    CHECK(r2.applicable);
    CHECK(!r2.satisfied);  // |N| = 3 > m-2

    // Close sizes select the first sub-row.
    auto r1 = rule_of(4, 1, 6, 5, true, false, true);
    CHECK(r1.applicable);
    CHECK(r1.satisfied);  // |L| = 1 <= m-3
  }

  SUBCASE("pattern 7 attaches hypotheses to its bound") {
    CHECK(rule_of(4, 1, 3, 3, false, true, true).applicable);
    auto r = rule_of(4, 1, 7, 3, false, true, true);  // |M| = 3 > m-2
    CHECK(!r.applicable);
  }

  SUBCASE("pattern 8 selects the dominant sub-row") {
    auto r = rule_of(3, 1, 1, 1, true, true, true);
    CHECK(r.applicable);
    CHECK(!r.satisfied);     // needs |L| <= m-3
    CHECK(*r.w_inf == 432);  // second sub-row dominates: 3*6*6*4
  }

  SUBCASE("degenerate subsets are out of scope") {
    auto r = rule_of(3, 0, 3, 1, false, false, false);
    CHECK(!r.applicable);
    CHECK(!r.satisfied);
  }
}

TEST_CASE("full analysis of the worked configuration") {
  auto rep = analyze(worked_spec());
  CHECK(rep.case_index == 1);
  CHECK(rep.defining_set_size == 64);
  CHECK(rep.gray_length == 192);
  CHECK(rep.code_size == 128);
  CHECK(rep.kernel == 256);
  CHECK(rep.dimension == 7);
  CHECK(*rep.min_distance == 64);
  CHECK(*rep.w0 == 64);
  CHECK(*rep.w_inf == 96);
  CHECK(rep.distinct_nonzero_weights == 2);
  CHECK(rep.enumerator_str == "X^192 + 9X^128Y^64 + 118X^96Y^96");
  CHECK(rep.methods == std::vector<std::string>{"brute", "charsum", "table"});
  CHECK(rep.discrepancies.empty());
  CHECK(*rep.ab_minimal);
  CHECK(rep.table_rule.satisfied);
  CHECK(*rep.exact_minimal);
  CHECK(rep.orthogonality.weights_mod4);
  CHECK(rep.orthogonality.gram_zero);
  CHECK(!rep.generator_matrix.has_value());
}

TEST_CASE("generator matrix rows are emitted on request") {
  AnalyzeOptions opt;
  opt.method = Method::charsum;
  opt.with_generator_matrix = true;
  auto rep = analyze(worked_spec(), opt);
  REQUIRE(rep.generator_matrix.has_value());
  CHECK(rep.generator_matrix->size() == 15);  // 3m rows
  for (auto& row : *rep.generator_matrix) {
    CHECK(row.size() == rep.gray_length);
    CHECK(row.find_first_not_of("01") == std::string::npos);
  }
}

TEST_CASE("single-method runs skip the cross-checks they cannot make") {
  AnalyzeOptions opt;
  opt.method = Method::brute;
  auto rep = analyze(worked_spec(), opt);
  CHECK(rep.methods == std::vector<std::string>{"brute"});
  CHECK(rep.discrepancies.empty());
  CHECK(rep.code_size == 128);
}

TEST_CASE("degenerate subsets run without the closed-form path") {
  // Empty first subset: factor complex is the origin alone.
  DefiningSetSpec spec(3, BitVec(3, 0), BitVec(3, 3), BitVec(3, 1));
  auto rep = analyze(spec);
  CHECK(rep.methods == std::vector<std::string>{"brute", "charsum"});
  CHECK(rep.discrepancies.empty());
  CHECK(!rep.table_rule.applicable);

  AnalyzeOptions table_only;
  table_only.method = Method::table;
  CHECK_THROWS_AS(analyze(spec, table_only), InvalidSpecError);
}

TEST_CASE("the zero code is reported, not crashed on") {
  // All three factors are the origin, so every codeword is zero.
  DefiningSetSpec spec(3, BitVec(3, 0), BitVec(3, 0), BitVec(3, 0));
  auto rep = analyze(spec);
  CHECK(rep.code_size == 1);
  CHECK(rep.kernel == 512);
  CHECK(rep.dimension == 0);
  CHECK(!rep.min_distance.has_value());
  CHECK(!rep.w0.has_value());
  CHECK(!rep.ab_minimal.has_value());
  CHECK(rep.exact_minimal.has_value());  // vacuously true
  CHECK(*rep.exact_minimal);
  CHECK(rep.discrepancies.empty());
}

TEST_CASE("orthogonality checks are independent predicates") {
  auto code = CodeHandle::build(worked_spec());
  auto good = self_orthogonality(code, cw_dist({{0, 1}, {64, 9}, {96, 118}}));
  CHECK(good.weights_mod4);
  CHECK(good.gram_zero);

  // A weight not divisible by 4 fails the first predicate only; the Gram
  // test still speaks about the actual generator rows.
  auto mixed = self_orthogonality(code, cw_dist({{0, 1}, {66, 127}}));
  CHECK(!mixed.weights_mod4);
  CHECK(mixed.gram_zero);
}

TEST_CASE("method names round-trip") {
  for (auto m : {Method::brute, Method::charsum, Method::table, Method::all})
    CHECK(method_from_string(method_name(m)) == m);
  CHECK_THROWS_AS(method_from_string("nonsense"), InvalidSpecError);
}
