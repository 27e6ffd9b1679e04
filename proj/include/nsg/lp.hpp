#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nsg/rational.hpp"

namespace nsg {

enum class Relation { LessEq, Equal, GreaterEq };

struct Constraint {
  std::vector<std::pair<int, Rational>> coeffs;  // sparse row, unique indices
  Relation rel = Relation::Equal;
  Rational rhs;
  std::string label;  // unique across the program, keys the dual multiplier
};

/// Exact maximization program:
///   max objective . x   s.t. constraints,  x_j >= 0 for j in nonneg_vars,
/// variables outside nonneg_vars are free.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;  // size num_vars
  std::vector<Constraint> constraints;
  std::set<int> nonneg_vars;

  /// Throws LpStructureError on dangling indices, duplicate indices within a
  /// row, duplicate or empty labels, or objective size mismatch.
  void validate() const;

  /// Line-oriented debug dump, one constraint per line, rationals as num/den.
  /// Not a stability contract.
  std::string dump() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> primal;           // size num_vars when Optimal
  std::map<std::string, Rational> dual;   // constraint label -> multiplier
};

/// Outcome of an arithmetic-only dual feasibility check.
struct DualCheck {
  bool feasible = false;
  Rational bound;         // implied upper bound on the primal optimum
  std::string violation;  // first offending condition when !feasible
};

/// Checks sign conditions (<=: y >= 0, >=: y <= 0, =: free) and reduced
/// costs (>= 0 for nonnegative variables, == 0 for free ones) for the given
/// multipliers; labels absent from `dual` count as zero multipliers.
/// On success returns the implied bound sum(y_i b_i). Pure arithmetic,
/// independent of any solver. Throws std::invalid_argument on a label that
/// does not exist in `lp`.
DualCheck check_dual_feasible(const LinearProgram& lp,
                              const std::map<std::string, Rational>& dual);

}  // namespace nsg
