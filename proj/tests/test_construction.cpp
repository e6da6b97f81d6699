#include <map>
#include <random>
#include <string>

#include "doctest.h"
#include "simpcodes/construction.hpp"

using namespace simpcodes;

namespace {

DefiningSetSpec small_spec() {
  return DefiningSetSpec(3, BitVec::from_indices(3, {1, 2}),
                         BitVec::from_indices(3, {2}),
                         BitVec::from_indices(3, {2, 3}));
}

RingVector random_message(std::mt19937_64& rng, int m) {
  RingVector v{size_t(m)};
  for (int i = 0; i < m; ++i)
    v.set_element(size_t(i), RingElement::from_code(int(rng() & 7)));
  return v;
}

// Message indexed by the integer whose 3m bits are the alpha, beta, gamma
// plane masks.
RingVector message_from_index(int m, uint64_t idx) {
  RingVector v{size_t(m)};
  for (int i = 0; i < m; ++i) {
    AlphaBetaGamma p;
    p.alpha = uint8_t((idx >> i) & 1);
    p.beta = uint8_t((idx >> (m + i)) & 1);
    p.gamma = uint8_t((idx >> (2 * m + i)) & 1);
    v.set_element(size_t(i), RingElement::compose(p));
  }
  return v;
}

}  // namespace

TEST_CASE("complement pattern numbering") {
  auto pat = [](bool cl, bool cm, bool cn) {
    return DefiningSetSpec(3, BitVec(3, 1), BitVec(3, 1), BitVec(3, 1), cl,
                           cm, cn)
        .case_index();
  };
  CHECK(pat(false, false, false) == 1);
  CHECK(pat(true, false, false) == 2);
  CHECK(pat(false, true, false) == 3);
  CHECK(pat(false, false, true) == 4);
  CHECK(pat(true, true, false) == 5);
  CHECK(pat(true, false, true) == 6);
  CHECK(pat(false, true, true) == 7);
  CHECK(pat(true, true, true) == 8);
}

TEST_CASE("spec validation and sizes") {
  CHECK_THROWS_AS(DefiningSetSpec(3, BitVec(4, 1), BitVec(3, 1), BitVec(3, 1)),
                  InvalidSpecError);

  auto spec = small_spec();
  CHECK(spec.proper_nonempty());
  CHECK(spec.defining_set_size() == 4 * 2 * 4);

  DefiningSetSpec comp(3, BitVec(3, 3), BitVec(3, 2), BitVec(3, 6), true,
                       false, true);
  CHECK(comp.defining_set_size() == 4 * 2 * 4);  // (8-4) * 2 * (8-4)

  DefiningSetSpec degenerate(3, BitVec(3, 0), BitVec(3, 7), BitVec(3, 1));
  CHECK(!degenerate.proper_nonempty());
  CHECK(degenerate.defining_set_size() == 1 * 8 * 2);
}

TEST_CASE("factors and flat indexing") {
  auto code = CodeHandle::build(small_spec());
  CHECK(code.defining_set_size() == 32);
  CHECK(code.gray_length() == 96);
  const auto &d1 = code.factor1(), &d2 = code.factor2(), &d3 = code.factor3();
  CHECK(d1.size() == 4);
  CHECK(d2.size() == 2);
  CHECK(d3.size() == 4);
  for (size_t i = 0; i < d1.size(); ++i)
    for (size_t j = 0; j < d2.size(); ++j)
      for (size_t k = 0; k < d3.size(); ++k) {
        auto e = code.defining_element(i * 8 + j * 4 + k);
        CHECK(e.alpha().words()[0] == d1[i]);
        CHECK(e.beta().words()[0] == d2[j]);
        CHECK(e.gamma().words()[0] == d3[k]);
      }
}

TEST_CASE("empty defining set is rejected") {
  // Complement of the full simplex is empty, so the product is empty.
  DefiningSetSpec spec(3, BitVec(3, 7), BitVec(3, 1), BitVec(3, 1), true,
                       false, false);
  CHECK(spec.defining_set_size() == 0);
  CHECK_THROWS_AS(CodeHandle::build(spec), InvalidSpecError);
}

TEST_CASE("codeword agrees with the dot-product definition") {
  auto code = CodeHandle::build(small_spec());
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto msg = random_message(rng, 3);
    auto cw = code.codeword(msg);
    CHECK(cw.length() == code.defining_set_size());
    for (uint64_t t = 0; t < code.defining_set_size(); ++t)
      CHECK(cw.element(size_t(t)) == msg.dot(code.defining_element(t)));
  }
}

TEST_CASE("the code map is linear and scalar-equivariant") {
  auto code = CodeHandle::build(small_spec());
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_message(rng, 3);
    auto y = random_message(rng, 3);
    CHECK(code.codeword(x + y) == code.codeword(x) + code.codeword(y));
    for (int s = 0; s < 8; ++s) {
      auto e = RingElement::from_code(s);
      CHECK(code.codeword(x * e) == code.codeword(x) * e);
    }
  }
}

TEST_CASE("kernel size matches a direct scan and the rank") {
  auto code = CodeHandle::build(small_spec());
  uint64_t direct = 0;
  for (uint64_t idx = 0; idx < (uint64_t{1} << 9); ++idx)
    if (code.codeword(message_from_index(3, idx)).is_zero()) ++direct;
  CHECK(code.kernel_size() == direct);

  auto rank = gf2_rank(code.gray_generator_matrix());
  CHECK(code.kernel_size() * (uint64_t{1} << rank) == (uint64_t{1} << 9));
}

TEST_CASE("generator rows are the gray images of the scaled basis messages") {
  auto code = CodeHandle::build(small_spec());
  auto rows = code.gray_generator_matrix();
  REQUIRE(rows.size() == 9);
  const RingElement scalars[3] = {RingElement(1, 0, 0), RingElement(0, 1, 0),
                                  RingElement(0, 0, 1)};
  for (int block = 0; block < 3; ++block)
    for (int i = 0; i < 3; ++i) {
      RingVector e(3);
      e.set_element(size_t(i), scalars[block]);
      auto expect = code.codeword(e).gray();
      CHECK(rows[size_t(block * 3 + i)] == expect);
      CHECK(rows[size_t(block * 3 + i)].size() == code.gray_length());
    }
}

TEST_CASE("every codeword fiber has kernel size") {
  auto code = CodeHandle::build(small_spec());
  std::map<std::string, uint64_t> fibers;
  for (uint64_t idx = 0; idx < (uint64_t{1} << 9); ++idx)
    ++fibers[code.codeword(message_from_index(3, idx)).gray().to_string()];
  const uint64_t kernel = code.kernel_size();
  CHECK(fibers.size() * kernel == (uint64_t{1} << 9));
  for (auto& [cw, count] : fibers) CHECK(count == kernel);
}

TEST_CASE("budgets bound the enumerations") {
  Budgets tight;
  tight.max_defining_set = 8;
  CHECK_THROWS_AS(CodeHandle::build(small_spec(), tight),
                  BudgetExceededError);

  auto code = CodeHandle::build(small_spec());
  Budgets msgs;
  msgs.max_messages = 16;
  CHECK_THROWS_AS(code.kernel_size(msgs), BudgetExceededError);
}

TEST_CASE("gf2 rank on hand matrices") {
  auto row = [](std::initializer_list<int> bits) {
    Bits b(4);
    size_t i = 0;
    for (int v : bits) b.set(i++, v != 0);
    return b;
  };
  CHECK(gf2_rank({row({1, 0, 0, 0}), row({0, 1, 0, 0}), row({1, 1, 0, 0})}) ==
        2);
  CHECK(gf2_rank({row({0, 0, 0, 0})}) == 0);
  CHECK(gf2_rank({row({1, 1, 1, 1}), row({0, 1, 1, 0}), row({0, 0, 1, 1}),
                  row({1, 0, 0, 1})}) == 3);
}
