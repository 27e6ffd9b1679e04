#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

/// Malformed text input (rational strings, JSON files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally invalid LinearProgram (dangling index, duplicate label).
/// Distinct from an Infeasible solve status.
struct LpStructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid domain object (game distribution not normalized, payoff out of
/// range, tuple outside declared alphabets, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Problem size exceeds the configured enumeration or solver budget.
/// Raised instead of ever returning an approximation.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two closed-form certificate lines assigned different values to the same
/// dual variable.
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A marginal that should be question-independent turned out not to be.
struct SignalingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nsg
