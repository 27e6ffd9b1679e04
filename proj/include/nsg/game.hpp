#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsg/rational.hpp"

namespace nsg {

/// An m-player nonlocal game: a question distribution pi over joint
/// questions and a payoff function V into [0,1]. Both are stored sparsely;
/// an absent entry is zero. Immutable by convention after construction.
struct Game {
  std::string name;
  std::vector<int> question_sizes;  // one alphabet size per player
  std::vector<int> answer_sizes;
  std::map<std::vector<int>, Rational> pi;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> payoff;  // (q, a)

  int players() const { return static_cast<int>(question_sizes.size()); }

  Rational pi_at(std::span<const int> q) const;
  Rational payoff_at(std::span<const int> q, std::span<const int> a) const;

  /// Enforces: >= 1 player, positive alphabet sizes, all tuples within the
  /// declared alphabets, pi a probability distribution summing to exactly 1,
  /// every payoff in [0,1]. Throws ValidationError.
  void validate() const;
};

Game make_chsh();

/// Three-player CHSH: uniform questions on bit triples, payoff 1/2 per
/// satisfied CHSH clause between players (1,2) and (1,3).
Game make_chsh_triangle();

/// Two-prover odd-cycle 2-coloring test on n vertices, n odd >= 3.
Game make_odd_cycle(int n);

/// N-th extension of a 2-player game: N extra clones of player 2 receive
/// player 2's question and must all return player 2's answer. extend(g, 0)
/// is g itself.
Game extend(const Game& g, int N);

/// One answer table per player, question index -> answer index.
struct DeterministicStrategy {
  std::vector<std::vector<int>> answers;
};

}  // namespace nsg
