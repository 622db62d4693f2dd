#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hb {

/// Malformed or out-of-contract input (bad simplex, wrong dimensions, non-cycle...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configurable size guardrail was hit (cells, subfamilies, search nodes).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Seeing one of these means a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The family is too small for the direct searches of the chain-map builders.
class InsufficientFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The generic point configuration is not in general position for some pair.
class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCellBudget = 1'000'000;
inline constexpr std::size_t kDefaultFamilyBudget = 20;

/// Reads HB_BUDGET from the environment, falling back to `fallback`.
std::size_t budget_from_env(std::size_t fallback);

}  // namespace hb
