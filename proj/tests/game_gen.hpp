// Random small 2-player games with exactly normalized rational question
// distributions, for property tests. The common denominator trick keeps the
// pi sum exactly 1 by construction.
#pragma once

#include <random>

#include "nsg/game.hpp"
#include "nsg/tuples.hpp"

namespace nsg_test {

inline nsg::Game random_small_game(std::mt19937_64& rng) {
  const auto draw = [&](long lo, long hi) {
    return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
  };
  nsg::Game g;
  g.name = "random";
  g.question_sizes = {static_cast<int>(draw(1, 3)), static_cast<int>(draw(1, 3))};
  g.answer_sizes = {static_cast<int>(draw(2, 3)), static_cast<int>(draw(2, 3))};

  const nsg::TupleSpace qs(g.question_sizes), as(g.answer_sizes);
  std::vector<long> weights;
  long total = 0;
  std::vector<int> q(2, 0);
  do {
    weights.push_back(draw(0, 4));
    total += weights.back();
  } while (qs.next(q));
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  size_t idx = 0;
  q = {0, 0};
  do {
    if (weights[idx] > 0) g.pi[q] = nsg::Rational(weights[idx], total);
    ++idx;
  } while (qs.next(q));

  q = {0, 0};
  do {
    std::vector<int> a(2, 0);
    do {
      if (draw(0, 1) == 0) {
        const long quarters = draw(1, 4);
        g.payoff[{q, a}] = nsg::Rational(quarters, 4);
      }
    } while (as.next(a));
  } while (qs.next(q));
  return g;
}

}  // namespace nsg_test
