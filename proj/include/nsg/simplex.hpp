#pragma once

#include "nsg/lp.hpp"

namespace nsg {

enum class PivotRule {
  Bland,             // least-index entering column; unconditional termination
  DantzigThenBland,  // most-negative reduced cost until progress stalls, then
                     // a permanent switch to Bland (still terminating)
};

struct SolveOptions {
  PivotRule rule = PivotRule::Bland;
  bool parallel = true;  // OpenMP tableau elimination; results are identical
  int max_vars = 20000;
  int max_constraints = 20000;
};

/// Exact two-phase primal simplex on a dense rational tableau.
/// On Optimal the solution carries both the primal point and the dual
/// multipliers recovered from the final basis; the pair is verified for
/// exact feasibility and matching objective values before returning.
/// Throws LpStructureError for malformed input (distinct from Infeasible)
/// and BudgetError when the instance exceeds the configured size caps.
LpSolution solve(const LinearProgram& lp, const SolveOptions& opts = {});

}  // namespace nsg
