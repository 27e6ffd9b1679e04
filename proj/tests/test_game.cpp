#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "game_gen.hpp"

#include "nsg/classical.hpp"
#include "nsg/errors.hpp"
#include "nsg/game.hpp"
#include "nsg/tuples.hpp"

using namespace nsg;

namespace {

// Evaluates a deterministic strategy directly from the game definition;
// used to confirm that the reported maximizer really attains the value.
Rational strategy_payoff(const Game& g, const DeterministicStrategy& s) {
  Rational total;
  for (const auto& [q, p] : g.pi) {
    std::vector<int> a(g.players());
    for (int i = 0; i < g.players(); ++i) a[i] = s.answers[i][q[i]];
    total += p * g.payoff_at(q, a);
  }
  return total;
}

Game permuted(const Game& g, std::mt19937_64& rng) {
  Game out = g;
  out.pi.clear();
  out.payoff.clear();
  std::vector<std::vector<int>> qperm(g.players()), aperm(g.players());
  for (int i = 0; i < g.players(); ++i) {
    qperm[i].resize(g.question_sizes[i]);
    aperm[i].resize(g.answer_sizes[i]);
    for (size_t k = 0; k < qperm[i].size(); ++k) qperm[i][k] = static_cast<int>(k);
    for (size_t k = 0; k < aperm[i].size(); ++k) aperm[i][k] = static_cast<int>(k);
    std::shuffle(qperm[i].begin(), qperm[i].end(), rng);
    std::shuffle(aperm[i].begin(), aperm[i].end(), rng);
  }
  for (const auto& [q, p] : g.pi) {
    std::vector<int> qq(q);
    for (int i = 0; i < g.players(); ++i) qq[i] = qperm[i][q[i]];
    out.pi[qq] = p;
  }
  for (const auto& [key, v] : g.payoff) {
    std::vector<int> qq(key.first), aa(key.second);
    for (int i = 0; i < g.players(); ++i) {
      qq[i] = qperm[i][key.first[i]];
      aa[i] = aperm[i][key.second[i]];
    }
    out.payoff[{qq, aa}] = v;
  }
  return out;
}

}  // namespace

TEST_CASE("chsh game data") {
  const Game g = make_chsh();
  CHECK(g.players() == 2);
  CHECK(g.pi_at(std::vector<int>{0, 1}) == Rational(1, 4));
  // V(a1,a2|q1,q2) = [a1 xor a2 = q1 and q2]
  CHECK(g.payoff_at(std::vector<int>{1, 1}, std::vector<int>{0, 0}) == Rational(0));
  CHECK(g.payoff_at(std::vector<int>{1, 1}, std::vector<int>{0, 1}) == Rational(1));
  CHECK_NOTHROW(g.validate());
}

TEST_CASE("chsh triangle game data") {
  const Game g = make_chsh_triangle();
  CHECK(g.players() == 3);
  CHECK(g.payoff_at(std::vector<int>{0, 0, 0}, std::vector<int>{0, 0, 0}) == Rational(1));
  CHECK(g.payoff_at(std::vector<int>{1, 1, 1}, std::vector<int>{0, 0, 1}) == Rational(1, 2));
  CHECK(g.pi_at(std::vector<int>{1, 0, 1}) == Rational(1, 8));
  CHECK_NOTHROW(g.validate());
}

TEST_CASE("odd cycle game data") {
  const Game g3 = make_odd_cycle(3);
  CHECK(g3.pi_at(std::vector<int>{2, 0}) == Rational(1, 6));  // 2+1 = 0 mod 3
  CHECK(g3.payoff_at(std::vector<int>{0, 0}, std::vector<int>{1, 1}) == Rational(1));
  CHECK(g3.payoff_at(std::vector<int>{0, 1}, std::vector<int>{1, 1}) == Rational(0));
  const Game g5 = make_odd_cycle(5);
  CHECK(g5.pi_at(std::vector<int>{1, 3}) == Rational(0));
  CHECK(g5.pi.size() == 10);  // 2n support pairs

  CHECK_THROWS_AS(make_odd_cycle(4), ValidationError);
  CHECK_THROWS_AS(make_odd_cycle(1), ValidationError);
  CHECK_THROWS_AS(make_odd_cycle(-3), ValidationError);
}

TEST_CASE("extension operator") {
  SUBCASE("zeroth extension is the game itself") {
    const Game g = make_chsh();
    const Game e = extend(g, 0);
    CHECK(e.name == g.name);
    CHECK(e.question_sizes == g.question_sizes);
    CHECK(e.pi == g.pi);
    CHECK(e.payoff == g.payoff);
  }
  SUBCASE("first extension of the odd cycle") {
    const Game e = extend(make_odd_cycle(3), 1);
    CHECK(e.players() == 3);
    CHECK(e.pi_at(std::vector<int>{0, 1, 1}) == Rational(1, 6));
    CHECK(e.pi_at(std::vector<int>{0, 1, 0}) == Rational(0));
    CHECK(e.payoff_at(std::vector<int>{0, 1, 1}, std::vector<int>{0, 1, 1}) == Rational(1));
    CHECK(e.payoff_at(std::vector<int>{0, 1, 1}, std::vector<int>{0, 1, 0}) == Rational(0));
    CHECK_NOTHROW(e.validate());
  }
  SUBCASE("extension payoff ignores clone questions") {
    const Game e = extend(make_chsh(), 1);
    CHECK(e.payoff_at(std::vector<int>{1, 1, 0}, std::vector<int>{0, 1, 1}) == Rational(1));
  }
  SUBCASE("only 2-player games extend") {
    CHECK_THROWS_AS(extend(make_chsh_triangle(), 1), ValidationError);
    CHECK_THROWS_AS(extend(make_chsh(), -1), ValidationError);
  }
}

TEST_CASE("game validation rejects bad data") {
  Game g = make_chsh();
  SUBCASE("unnormalized pi") {
    g.pi[{0, 0}] = Rational(1, 2);
    CHECK_THROWS_AS(g.validate(), ValidationError);
  }
  SUBCASE("negative pi") {
    g.pi[{0, 0}] = Rational(-1, 4);
    CHECK_THROWS_AS(g.validate(), ValidationError);
  }
  SUBCASE("payoff above one") {
    g.payoff[{{0, 0}, {0, 0}}] = Rational(3, 2);
    CHECK_THROWS_AS(g.validate(), ValidationError);
  }
  SUBCASE("tuple out of range") {
    g.pi.erase({0, 0});
    g.pi[{0, 5}] = Rational(1, 4);
    CHECK_THROWS_AS(g.validate(), ValidationError);
  }
}

TEST_CASE("classical values of the built-in games") {
  const ClassicalResult chsh = classical_value(make_chsh());
  CHECK(chsh.value == Rational(3, 4));
  CHECK(strategy_payoff(make_chsh(), chsh.strategy) == Rational(3, 4));

  const ClassicalResult oc5 = classical_value(make_odd_cycle(5));
  CHECK(oc5.value == Rational(9, 10));
  CHECK(strategy_payoff(make_odd_cycle(5), oc5.strategy) == Rational(9, 10));

  const ClassicalResult tri = classical_value(make_chsh_triangle());
  CHECK(tri.value == Rational(3, 4));
  // all-zero answers attain 3/4 and come first in enumeration order
  for (const auto& table : tri.strategy.answers)
    for (int a : table) CHECK(a == 0);
}

TEST_CASE("classical value is invariant under extension") {
  for (const Game& g : {make_chsh(), make_odd_cycle(3)}) {
    const Rational base = classical_value(g).value;
    for (int N : {0, 1, 2})
      CHECK(classical_value(extend(g, N)).value == base);
  }
}

TEST_CASE("classical value is invariant under relabeling") {
  std::mt19937_64 rng(2026);
  for (const Game& g : {make_chsh(), make_odd_cycle(3), make_chsh_triangle()}) {
    const Rational base = classical_value(g).value;
    for (int round = 0; round < 5; ++round) {
      const Game h = permuted(g, rng);
      CHECK_NOTHROW(h.validate());
      CHECK(classical_value(h).value == base);
    }
  }
}

TEST_CASE("classical value bounds and the all-ones game") {
  for (const Game& g : {make_chsh(), make_chsh_triangle(), make_odd_cycle(5)}) {
    const Rational v = classical_value(g).value;
    CHECK(v.sign() >= 0);
    CHECK(v <= Rational(1));
  }
  Game ones;
  ones.name = "all-ones";
  ones.question_sizes = {2, 2};
  ones.answer_sizes = {2, 2};
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2) {
      ones.pi[{q1, q2}] = Rational(1, 4);
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2) ones.payoff[{{q1, q2}, {a1, a2}}] = 1;
    }
  CHECK(classical_value(ones).value == Rational(1));
}

TEST_CASE("enumeration budget is a hard refusal") {
  Game big;
  big.name = "big";
  big.question_sizes = {13, 13};
  big.answer_sizes = {2, 2};
  const TupleSpace qs(big.question_sizes);
  std::vector<int> q(2, 0);
  do {
    big.pi[q] = Rational(1, 169);
  } while (qs.next(q));
  CHECK_NOTHROW(big.validate());  // 2^26 strategies > default budget
  CHECK_THROWS_AS(classical_value(big), BudgetError);

  ClassicalOptions tight;
  tight.budget = 8;  // chsh has 16 strategies
  CHECK_THROWS_AS(classical_value(make_chsh(), tight), BudgetError);
  tight.budget = 16;
  CHECK(classical_value(make_chsh(), tight).value == Rational(3, 4));
}

TEST_CASE("enumeration agrees with an independent brute force on random games") {
  std::mt19937_64 rng(314159);
  for (int iter = 0; iter < 60; ++iter) {
    const Game g = nsg_test::random_small_game(rng);
    REQUIRE_NOTHROW(g.validate());

    // plain nested-loop maximum, sharing nothing with the library's scan
    Rational best(-1);
    std::vector<std::vector<int>> tables(g.players());
    for (int i = 0; i < g.players(); ++i) tables[i].assign(g.question_sizes[i], 0);
    const std::function<void(int, int)> rec = [&](int player, int question) {
      if (player == g.players()) {
        Rational v;
        for (const auto& [q, p] : g.pi) {
          std::vector<int> a(g.players());
          for (int i = 0; i < g.players(); ++i) a[i] = tables[i][q[i]];
          v += p * g.payoff_at(q, a);
        }
        if (v > best) best = v;
        return;
      }
      if (question == g.question_sizes[player]) {
        rec(player + 1, 0);
        return;
      }
      for (int a = 0; a < g.answer_sizes[player]; ++a) {
        tables[player][question] = a;
        rec(player, question + 1);
      }
    };
    rec(0, 0);

    const ClassicalResult got = classical_value(g);
    CHECK(got.value == best);
    CHECK(strategy_payoff(g, got.strategy) == got.value);
  }
}

TEST_CASE("tie-break picks the first maximizer in enumeration order") {
  // a game every strategy wins: the first strategy (all zeros) must win ties
  Game g;
  g.name = "flat";
  g.question_sizes = {2};
  g.answer_sizes = {2};
  g.pi[{0}] = Rational(1, 2);
  g.pi[{1}] = Rational(1, 2);
  for (int q = 0; q < 2; ++q)
    for (int a = 0; a < 2; ++a) g.payoff[{{q}, {a}}] = 1;
  const ClassicalResult r = classical_value(g);
  CHECK(r.value == Rational(1));
  CHECK(r.strategy.answers == std::vector<std::vector<int>>{{0, 0}});
}
