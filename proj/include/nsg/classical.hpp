#pragma once

#include <cstdint>

#include "nsg/game.hpp"

namespace nsg {

struct ClassicalOptions {
  std::uint64_t budget = std::uint64_t{1} << 25;  // max strategies enumerated
  bool parallel = true;  // OpenMP partition of the strategy space
};

struct ClassicalResult {
  Rational value;
  DeterministicStrategy strategy;  // first maximizer in enumeration order
};

/// Exact classical value by exhaustive enumeration of deterministic
/// strategies (shared randomness cannot beat the maximum of a linear
/// function, so this is the classical optimum). Enumeration order is
/// lexicographic with player 1's answer table slowest and question 0 the
/// most significant digit within a table; ties resolve to the first
/// maximizer. Serial and parallel runs return identical results.
/// Throws BudgetError when the strategy count exceeds the budget; never
/// approximates.
ClassicalResult classical_value(const Game& g, const ClassicalOptions& opts = {});

}  // namespace nsg
