#include "nsg/ns_lp.hpp"

#include <sstream>
#include <stdexcept>

#include "nsg/errors.hpp"

namespace nsg {
namespace {

std::string join(std::span<const int> t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  return os.str();
}

Behavior behavior_from_primal(const std::vector<int>& qsizes,
                              const std::vector<int>& asizes,
                              const std::vector<Rational>& primal) {
  Behavior b(qsizes, asizes);
  for (std::uint64_t i = 0; i < b.cells(); ++i) b.cell(i) = primal[i];
  return b;
}

}  // namespace

LinearProgram build_ns_constraints(const std::vector<int>& question_sizes,
                                   const std::vector<int>& answer_sizes) {
  const TupleSpace qs(question_sizes), as(answer_sizes);
  const int m = static_cast<int>(question_sizes.size());
  LinearProgram lp;
  lp.num_vars = static_cast<int>(qs.total() * as.total());
  lp.objective.assign(lp.num_vars, Rational(0));
  for (int j = 0; j < lp.num_vars; ++j) lp.nonneg_vars.insert(j);

  const auto var = [&](std::span<const int> q, std::span<const int> a) {
    return static_cast<int>(qs.index_of(q) * as.total() + as.index_of(a));
  };

  std::vector<int> q(m, 0);
  do {
    Constraint c;
    c.rel = Relation::Equal;
    c.rhs = 1;
    c.label = "norm(" + join(q) + ")";
    std::vector<int> a(m, 0);
    do {
      c.coeffs.emplace_back(var(q, a), Rational(1));
    } while (as.next(a));
    lp.constraints.push_back(std::move(c));
  } while (qs.next(q));

  // Per-party no-signaling: marginal over party i's answer is the same for
  // every pair of i's questions, at each fixed configuration of the others.
  for (int i = 0; i < m; ++i) {
    std::vector<int> others;
    for (int p = 0; p < m; ++p)
      if (p != i) others.push_back(p);
    std::vector<int> o_qsizes, o_asizes;
    for (int p : others) {
      o_qsizes.push_back(question_sizes[p]);
      o_asizes.push_back(answer_sizes[p]);
    }
    const TupleSpace oq(o_qsizes), oa(o_asizes);

    std::vector<int> q_full(m), a_full(m);
    std::vector<int> a_o(others.size(), 0);
    do {
      std::vector<int> q_o(others.size(), 0);
      do {
        for (size_t t = 0; t < others.size(); ++t) {
          q_full[others[t]] = q_o[t];
          a_full[others[t]] = a_o[t];
        }
        for (int q1 = 0; q1 < question_sizes[i]; ++q1)
          for (int q2 = q1 + 1; q2 < question_sizes[i]; ++q2) {
            Constraint c;
            c.rel = Relation::Equal;
            c.rhs = 0;
            c.label = "ns(p" + std::to_string(i) + "|a=" + join(a_o) + "|q=" +
                      join(q_o) + "|" + std::to_string(q1) + "->" +
                      std::to_string(q2) + ")";
            for (int ai = 0; ai < answer_sizes[i]; ++ai) {
              a_full[i] = ai;
              q_full[i] = q1;
              c.coeffs.emplace_back(var(q_full, a_full), Rational(1));
              q_full[i] = q2;
              c.coeffs.emplace_back(var(q_full, a_full), Rational(-1));
            }
            lp.constraints.push_back(std::move(c));
          }
      } while (oq.next(q_o));
    } while (oa.next(a_o));
  }
  return lp;
}

LinearProgram build_ns_lp(const Game& g) {
  g.validate();
  LinearProgram lp = build_ns_constraints(g.question_sizes, g.answer_sizes);
  const TupleSpace qs(g.question_sizes), as(g.answer_sizes);
  for (const auto& [key, v] : g.payoff) {
    const Rational w = g.pi_at(key.first) * v;
    if (w.is_zero()) continue;
    lp.objective[qs.index_of(key.first) * as.total() + as.index_of(key.second)] += w;
  }
  return lp;
}

NsResult ns_value(const Game& g, const SolveOptions& opts) {
  const LinearProgram lp = build_ns_lp(g);
  LpSolution sol = solve(lp, opts);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("no-signaling LP must be feasible and bounded");
  Behavior b = behavior_from_primal(g.question_sizes, g.answer_sizes, sol.primal);
  if (auto bad = validate_behavior(b))
    throw std::logic_error("LP builder bug: optimal point signals: " + bad->what);
  return {sol.value, std::move(b), std::move(sol.dual)};
}

FrontierPoint chsh_tradeoff_max(const Rational& alpha, const Rational& beta,
                                const SolveOptions& opts) {
  if (alpha.is_zero() && beta.is_zero())
    throw std::invalid_argument("tradeoff weights must not both be zero");
  const std::vector<int> sizes{2, 2, 2};
  LinearProgram lp = build_ns_constraints(sizes, sizes);
  const TupleSpace qs(sizes), as(sizes);

  // alpha <B^AB> + beta <B^AC> as a linear functional on the p variables;
  // the bystander's question is pinned to 0 (any choice agrees on the
  // no-signaling polytope, and the validator confirms it on the optimizer).
  const auto add = [&](int x, int y, const Rational& w) {
    std::vector<int> q(3, 0), a(3);
    for (int qx = 0; qx < 2; ++qx)
      for (int qy = 0; qy < 2; ++qy) {
        q[x] = qx; q[y] = qy;
        const int qsign = (qx & qy) ? -1 : 1;
        a = {0, 0, 0};
        do {
          const int asign = (a[x] ^ a[y]) ? -1 : 1;
          lp.objective[qs.index_of(q) * as.total() + as.index_of(a)] +=
              w * Rational(qsign * asign);
        } while (as.next(a));
      }
  };
  add(0, 1, alpha);
  add(0, 2, beta);

  const LpSolution sol = solve(lp, opts);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("tradeoff LP must be feasible and bounded");
  Behavior b = behavior_from_primal(sizes, sizes, sol.primal);
  if (auto bad = validate_behavior(b))
    throw std::logic_error("LP builder bug: optimal point signals: " + bad->what);
  return {alpha, beta, sol.value, std::move(b)};
}

}  // namespace nsg
