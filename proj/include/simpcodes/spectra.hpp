#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "simpcodes/budgets.hpp"
#include "simpcodes/construction.hpp"

namespace simpcodes {

// message: frequencies count messages in R^m (they sum to 2^{3m});
// codeword: frequencies count distinct codewords (they sum to |C_D|).
// The two differ exactly by the kernel size factor.
enum class Level { message, codeword };

struct WeightDistribution {
  Level level = Level::message;
  std::vector<std::pair<uint64_t, uint64_t>> entries;  // sorted by weight

  uint64_t total() const;
  uint64_t min_nonzero_weight() const;  // w0; throws on the zero code
  uint64_t max_weight() const;          // w_inf
  int distinct_nonzero_weights() const;
  bool has_nonzero_weight() const;
  WeightDistribution to_codeword_level(uint64_t kernel_size) const;
};

// Exact histogram of wt_L(c_D(x)) by enumerating every message and every
// defining-set element: the arbiter the other two paths are measured
// against.  Work is 2^{3m} * |D| coordinate products, sharded over threads.
WeightDistribution brute_force_distribution(const CodeHandle& code,
                                            Level level = Level::message,
                                            const Budgets& budgets = {});

// Same histogram through the character-sum identity: per message the
// weight is 3/2 |D| - 1/2 S1(alpha) [S2(gamma) S3(beta) + S2(beta) |D3|
// + S2(beta+gamma) S3(beta)], each factor a closed-form character sum.
WeightDistribution charsum_distribution(const CodeHandle& code,
                                        Level level = Level::message,
                                        const Budgets& budgets = {});

// Closed-form rows (message level); requires proper nonempty L, M, N.
WeightDistribution table_distribution(const DefiningSetSpec& spec);

// Homogeneous weight enumerator sum_i A_i X^{n-i} Y^i over the Gray
// image, built from a codeword-level distribution; n = 3|D|.
struct EnumeratorPolynomial {
  uint64_t n = 0;
  std::vector<std::pair<uint64_t, uint64_t>> terms;  // (weight, coefficient)
  std::string to_string() const;
};

EnumeratorPolynomial enumerator(const WeightDistribution& codeword_level,
                                uint64_t gray_length);

std::string distribution_csv(const WeightDistribution& dist);

// "identical", or a one-line description of the first differing entry.
std::string first_difference(const WeightDistribution& a,
                             const WeightDistribution& b);

}  // namespace simpcodes
