#include "nsg/game.hpp"

#include "nsg/errors.hpp"
#include "nsg/tuples.hpp"

namespace nsg {

namespace {

std::vector<int> to_vec(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

Rational Game::pi_at(std::span<const int> q) const {
  auto it = pi.find(to_vec(q));
  return it == pi.end() ? Rational(0) : it->second;
}

Rational Game::payoff_at(std::span<const int> q, std::span<const int> a) const {
  auto it = payoff.find({to_vec(q), to_vec(a)});
  return it == payoff.end() ? Rational(0) : it->second;
}

void Game::validate() const {
  if (players() < 1) throw ValidationError("game needs at least one player");
  if (answer_sizes.size() != question_sizes.size())
    throw ValidationError("question/answer size lists disagree on player count");
  const TupleSpace qspace(question_sizes);
  const TupleSpace aspace(answer_sizes);
  Rational total;
  for (const auto& [q, p] : pi) {
    if (!qspace.contains(q))
      throw ValidationError("pi entry outside the question alphabets");
    if (p.sign() < 0) throw ValidationError("negative pi entry");
    total += p;
  }
  if (!(total == Rational(1)))
    throw ValidationError("pi sums to " + total.str() + ", not 1");
  for (const auto& [key, v] : payoff) {
    if (!qspace.contains(key.first) || !aspace.contains(key.second))
      throw ValidationError("payoff entry outside the declared alphabets");
    if (v.sign() < 0 || v > Rational(1))
      throw ValidationError("payoff value " + v.str() + " outside [0,1]");
  }
}

Game make_chsh() {
  Game g;
  g.name = "chsh";
  g.question_sizes = {2, 2};
  g.answer_sizes = {2, 2};
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2) {
      g.pi[{q1, q2}] = Rational(1, 4);
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
          if ((a1 ^ a2) == (q1 & q2)) g.payoff[{{q1, q2}, {a1, a2}}] = 1;
    }
  return g;
}

Game make_chsh_triangle() {
  Game g;
  g.name = "chsh3";
  g.question_sizes = {2, 2, 2};
  g.answer_sizes = {2, 2, 2};
  std::vector<int> q(3), a(3);
  const TupleSpace bits({2, 2, 2});
  do {
    g.pi[q] = Rational(1, 8);
    a = {0, 0, 0};
    do {
      Rational v;
      if ((a[0] ^ a[1]) == (q[0] & q[1])) v += Rational(1, 2);
      if ((a[0] ^ a[2]) == (q[0] & q[2])) v += Rational(1, 2);
      if (!v.is_zero()) g.payoff[{q, a}] = v;
    } while (bits.next(a));
  } while (bits.next(q));
  return g;
}

Game make_odd_cycle(int n) {
  if (n < 3 || n % 2 == 0)
    throw ValidationError("odd-cycle length must be odd and >= 3, got " +
                          std::to_string(n));
  Game g;
  g.name = "oddcycle(n=" + std::to_string(n) + ")";
  g.question_sizes = {n, n};
  g.answer_sizes = {2, 2};
  for (int q = 0; q < n; ++q) {
    // same vertex: colors must agree; adjacent vertices: colors must differ
    g.pi[{q, q}] = Rational(1, 2 * n);
    g.pi[{q, (q + 1) % n}] = Rational(1, 2 * n);
    for (int a = 0; a < 2; ++a) {
      g.payoff[{{q, q}, {a, a}}] = 1;
      g.payoff[{{q, (q + 1) % n}, {a, 1 - a}}] = 1;
    }
  }
  return g;
}

Game extend(const Game& g, int N) {
  if (g.players() != 2)
    throw ValidationError("extension is defined for 2-player games only");
  if (N < 0) throw ValidationError("extension count must be >= 0");
  if (N == 0) return g;

  Game e;
  e.name = g.name + "-ext" + std::to_string(N);
  e.question_sizes = {g.question_sizes[0]};
  e.answer_sizes = {g.answer_sizes[0]};
  for (int i = 0; i <= N; ++i) {
    e.question_sizes.push_back(g.question_sizes[1]);
    e.answer_sizes.push_back(g.answer_sizes[1]);
  }
  for (const auto& [q, p] : g.pi) {
    std::vector<int> qe(N + 2, q[1]);
    qe[0] = q[0];
    e.pi[qe] = p;
  }
  // V_N ignores the clones' questions entirely; it only demands that the
  // clones' answers match player 2's.
  const TupleSpace clone_qs(std::vector<int>(N, g.question_sizes[1]));
  for (const auto& [key, v] : g.payoff) {
    const auto& [q, a] = key;
    std::vector<int> ae(N + 2, a[1]);
    ae[0] = a[0];
    std::vector<int> qe(N + 2);
    qe[0] = q[0];
    qe[1] = q[1];
    std::vector<int> rest(N, 0);
    do {
      for (int i = 0; i < N; ++i) qe[2 + i] = rest[i];
      e.payoff[{qe, ae}] = v;
    } while (clone_qs.next(rest));
  }
  return e;
}

}  // namespace nsg
