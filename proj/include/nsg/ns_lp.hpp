#pragma once

#include "nsg/behavior.hpp"
#include "nsg/game.hpp"
#include "nsg/lp.hpp"
#include "nsg/simplex.hpp"

namespace nsg {

/// The no-signaling polytope as an LP constraint system: one variable per
/// (joint answer, joint question) cell with answers varying fastest, the
/// normalization equality per joint question, and the per-party
/// no-signaling equalities (for each party, each fixed answers/questions of
/// the others, and each unordered pair of that party's questions, the
/// marginals over the party's answer agree). Single-party conditions imply
/// the all-subset ones for a full joint table; validate_behavior checks the
/// implication independently on every solution. No objective is set.
LinearProgram build_ns_constraints(const std::vector<int>& question_sizes,
                                   const std::vector<int>& answer_sizes);

/// build_ns_constraints plus the winning-probability objective
/// sum pi(q) V(a|q) p(a|q) for the given game.
LinearProgram build_ns_lp(const Game& g);

struct NsResult {
  Rational value;
  Behavior behavior;
  std::map<std::string, Rational> dual;  // multipliers keyed by LP labels
};

/// Exact no-signaling value and an optimal behavior (verified against the
/// all-subset validator before returning).
NsResult ns_value(const Game& g, const SolveOptions& opts = {});

struct FrontierPoint {
  Rational alpha, beta;
  Rational optimum;  // alpha <B_AB> + beta <B_AC> at `behavior`
  Behavior behavior;
};

/// Maximizes alpha <B_CHSH^AB> + beta <B_CHSH^AC> over all 3-party
/// no-signaling behaviors with two questions and two answers per party.
/// (alpha, beta) = (0, 0) is rejected.
FrontierPoint chsh_tradeoff_max(const Rational& alpha, const Rational& beta,
                                const SolveOptions& opts = {});

}  // namespace nsg
