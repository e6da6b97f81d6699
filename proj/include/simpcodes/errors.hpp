#pragma once

#include <stdexcept>
#include <string>

namespace simpcodes {

// Thrown when parameters violate a precondition (bad subset, width
// mismatch, empty defining set, formula hypothesis not met).
class InvalidSpecError : public std::invalid_argument {
 public:
  explicit InvalidSpecError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Thrown when an operation would exceed its enumeration budget.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace simpcodes
