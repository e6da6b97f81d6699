#pragma once

#include <cstdint>

namespace simpcodes {

// Enumeration ceilings for the exact paths.  Exceeding one raises
// BudgetExceededError instead of silently degrading.
struct Budgets {
  uint64_t max_defining_set = uint64_t{1} << 24;  // |D|
  uint64_t max_messages = uint64_t{1} << 24;      // 2^{3m} message scans
  uint64_t max_weight_ops = uint64_t{1} << 36;    // 2^{3m} * |D| direct path
  uint64_t max_codewords_exact = uint64_t{1} << 16;  // covering check
  int threads = 0;  // 0 = hardware concurrency
};

}  // namespace simpcodes
