#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simpcodes/budgets.hpp"
#include "simpcodes/ring.hpp"
#include "simpcodes/simplicial.hpp"

namespace simpcodes {

// Defining set D = (1+u^2) D1 + u^2 (D2 + (u+u^2) D3) where each factor is
// the complex over its generator or the complement of that complex.  The
// eight complement patterns are numbered:
//   1 none, 2 L, 3 M, 4 N, 5 LM, 6 LN, 7 MN, 8 LMN.
struct DefiningSetSpec {
  int m = 1;
  BitVec L, M, N;
  bool comp_l = false, comp_m = false, comp_n = false;

  DefiningSetSpec() = default;
  DefiningSetSpec(int m_, BitVec l, BitVec mm, BitVec n, bool cl = false,
                  bool cm = false, bool cn = false);

  int case_index() const {
    static constexpr int idx[8] = {1, 2, 3, 5, 4, 6, 7, 8};
    return idx[(comp_l ? 1 : 0) | (comp_m ? 2 : 0) | (comp_n ? 4 : 0)];
  }

  ComplexSpec factor1() const { return {m, L, comp_l}; }
  ComplexSpec factor2() const { return {m, M, comp_m}; }
  ComplexSpec factor3() const { return {m, N, comp_n}; }

  uint64_t defining_set_size() const {
    return factor1().size() * factor2().size() * factor3().size();
  }

  // All three subsets proper and nonempty: the hypothesis the row tables
  // and the minimality table need.
  bool proper_nonempty() const {
    return !L.is_zero() && !L.is_full() && !M.is_zero() && !M.is_full() &&
           !N.is_zero() && !N.is_full();
  }
};

// D materialized as its three factors; the element at flat index
// i*|D2|*|D3| + j*|D3| + k has planes (D1[i], D2[j], D3[k]).
class CodeHandle {
 public:
  static CodeHandle build(const DefiningSetSpec& spec,
                          const Budgets& budgets = {});

  const DefiningSetSpec& spec() const { return spec_; }
  uint64_t defining_set_size() const { return dsize_; }
  uint64_t gray_length() const { return 3 * dsize_; }

  const std::vector<uint32_t>& factor1() const { return d1_; }
  const std::vector<uint32_t>& factor2() const { return d2_; }
  const std::vector<uint32_t>& factor3() const { return d3_; }

  RingVector defining_element(uint64_t flat) const;

  // c_D(v) = (v . d)_{d in D}, length |D|.
  RingVector codeword(const RingVector& message) const;

  // Number of messages mapping to the zero codeword; exact enumeration
  // over 2^{3m} messages with early exit, cached after the first call.
  uint64_t kernel_size(const Budgets& budgets = {}) const;

  // Rows Phi(c_D(e_i)), Phi(c_D(u e_i)), Phi(c_D(u^2 e_i)) stacked in
  // three blocks of m; each row has 3|D| bits.
  std::vector<Bits> gray_generator_matrix() const;

 private:
  CodeHandle(DefiningSetSpec spec, std::vector<uint32_t> d1,
             std::vector<uint32_t> d2, std::vector<uint32_t> d3);

  DefiningSetSpec spec_;
  std::vector<uint32_t> d1_, d2_, d3_;
  uint64_t dsize_ = 0;
  mutable std::optional<uint64_t> kernel_;
};

// GF(2) rank by elimination; consumes a copy of the rows.
size_t gf2_rank(std::vector<Bits> rows);

}  // namespace simpcodes
