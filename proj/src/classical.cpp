#include "nsg/classical.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <limits>

#include "nsg/errors.hpp"
#include "nsg/tuples.hpp"

namespace nsg {
namespace {

// Flattened pi-support entry: the per-player question indices plus the
// winning probability for every joint answer, pre-multiplied by pi(q).
struct SupportEntry {
  std::vector<int> q;
  std::vector<std::int64_t> scaled;  // scale * pi(q) * V(a|q), dense over answers
  std::vector<Rational> exact;       // pi(q) * V(a|q), used when scaling overflows
};

struct Problem {
  const Game* game = nullptr;
  TupleSpace answers;                  // joint answer space
  std::vector<SupportEntry> support;
  std::vector<std::uint64_t> radix;    // answer-table count per player
  std::vector<std::uint64_t> suffix;   // product of radixes after player i
  std::uint64_t total = 0;             // deterministic strategy count
  mpz_class scale;                     // common denominator; fits int64 on fast path
  bool fast = false;
};

// Answer tables as digit vectors, advanced like an odometer so the scan
// visits strategies in increasing global index order.
struct Tables {
  std::vector<std::vector<int>> t;  // per player, question -> answer

  void seed(const Problem& p, std::uint64_t index) {
    const auto& g = *p.game;
    t.assign(g.players(), {});
    for (int i = g.players(); i-- > 0;) {
      std::uint64_t ti = index % p.radix[i];
      index /= p.radix[i];
      t[i].assign(g.question_sizes[i], 0);
      for (int q = g.question_sizes[i]; q-- > 0;) {
        t[i][q] = static_cast<int>(ti % g.answer_sizes[i]);
        ti /= g.answer_sizes[i];
      }
    }
  }

  void advance(const Problem& p) {
    const auto& g = *p.game;
    for (int i = g.players(); i-- > 0;) {
      auto& tab = t[i];
      for (int q = g.question_sizes[i]; q-- > 0;) {
        if (++tab[q] < g.answer_sizes[i]) return;
        tab[q] = 0;
      }
    }
  }
};

Problem prepare(const Game& g, const ClassicalOptions& opts) {
  Problem p;
  p.game = &g;
  p.answers = TupleSpace(g.answer_sizes);

  mpz_class total = 1;
  std::vector<mpz_class> radix_z(g.players());
  for (int i = 0; i < g.players(); ++i) {
    mpz_ui_pow_ui(radix_z[i].get_mpz_t(), g.answer_sizes[i], g.question_sizes[i]);
    total *= radix_z[i];
  }
  if (total > opts.budget)
    throw BudgetError("strategy count " + total.get_str() +
                      " exceeds enumeration budget " + std::to_string(opts.budget));
  p.total = total.get_ui();
  p.radix.resize(g.players());
  for (int i = 0; i < g.players(); ++i) p.radix[i] = radix_z[i].get_ui();
  p.suffix.assign(g.players() + 1, 1);
  for (int i = g.players(); i-- > 0;) p.suffix[i] = p.suffix[i + 1] * p.radix[i];

  p.scale = 1;
  for (const auto& [q, prob] : g.pi) {
    if (prob.is_zero()) continue;
    SupportEntry e;
    e.q = q;
    e.exact.assign(p.answers.total(), Rational(0));
    for (const auto& [key, v] : g.payoff) {
      if (key.first != q) continue;
      const Rational term = prob * v;
      e.exact[p.answers.index_of(key.second)] = term;
      p.scale = lcm(p.scale, term.denominator());
    }
    p.support.push_back(std::move(e));
  }

  // Scaled-integer accumulation: terms are nonnegative and sum to at most
  // scale (payoffs sit in [0,1]), so int64 is overflow-safe whenever the
  // common denominator itself fits.
  p.fast = mpz_sizeinbase(p.scale.get_mpz_t(), 2) <= 62;
  if (p.fast) {
    for (auto& e : p.support) {
      e.scaled.resize(e.exact.size());
      for (size_t a = 0; a < e.exact.size(); ++a) {
        mpz_class num = e.exact[a].numerator() * (p.scale / e.exact[a].denominator());
        e.scaled[a] = mpz_get_si(num.get_mpz_t());
      }
    }
  }
  return p;
}

std::int64_t eval_fast(const Problem& p, const Tables& tb) {
  std::int64_t sum = 0;
  const auto& asz = p.game->answer_sizes;
  for (const auto& e : p.support) {
    std::uint64_t aidx = 0;
    for (size_t i = 0; i < tb.t.size(); ++i)
      aidx = aidx * asz[i] + static_cast<std::uint64_t>(tb.t[i][e.q[i]]);
    sum += e.scaled[aidx];
  }
  return sum;
}

Rational eval_exact(const Problem& p, const Tables& tb) {
  Rational sum;
  const auto& asz = p.game->answer_sizes;
  for (const auto& e : p.support) {
    std::uint64_t aidx = 0;
    for (size_t i = 0; i < tb.t.size(); ++i)
      aidx = aidx * asz[i] + static_cast<std::uint64_t>(tb.t[i][e.q[i]]);
    if (!e.exact[aidx].is_zero()) sum += e.exact[aidx];
  }
  return sum;
}

struct Best {
  std::int64_t fast_val = std::numeric_limits<std::int64_t>::min();
  Rational exact_val = Rational(-1);
  std::uint64_t index = 0;
  bool set = false;
};

// Scans [begin, end) keeping the first maximizer.
Best scan_range(const Problem& p, std::uint64_t begin, std::uint64_t end) {
  Best best;
  Tables tb;
  tb.seed(p, begin);
  for (std::uint64_t s = begin; s < end; ++s, tb.advance(p)) {
    if (p.fast) {
      const std::int64_t v = eval_fast(p, tb);
      if (!best.set || v > best.fast_val) {
        best.fast_val = v;
        best.index = s;
        best.set = true;
      }
    } else {
      Rational v = eval_exact(p, tb);
      if (!best.set || v > best.exact_val) {
        best.exact_val = std::move(v);
        best.index = s;
        best.set = true;
      }
    }
  }
  return best;
}

void merge(Best& into, const Best& other, bool fast) {
  if (!other.set) return;
  if (!into.set) { into = other; return; }
  const bool better = fast ? other.fast_val > into.fast_val
                           : other.exact_val > into.exact_val;
  const bool equal = fast ? other.fast_val == into.fast_val
                          : other.exact_val == into.exact_val;
  if (better || (equal && other.index < into.index)) into = other;
}

}  // namespace

ClassicalResult classical_value(const Game& g, const ClassicalOptions& opts) {
  g.validate();
  const Problem p = prepare(g, opts);

  Best best;
#ifdef _OPENMP
  if (opts.parallel && p.total >= 4096) {
    const int nt = omp_get_max_threads();
    std::vector<Best> local(nt);
#pragma omp parallel num_threads(nt)
    {
      const int id = omp_get_thread_num();
      const std::uint64_t chunk = (p.total + nt - 1) / nt;
      const std::uint64_t lo = std::min<std::uint64_t>(id * chunk, p.total);
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, p.total);
      local[id] = scan_range(p, lo, hi);
    }
    for (const Best& b : local) merge(best, b, p.fast);
  } else
#endif
  {
    best = scan_range(p, 0, p.total);
  }

  ClassicalResult out;
  out.value = p.fast ? Rational(best.fast_val) / Rational(p.scale)
                     : best.exact_val;
  Tables tb;
  tb.seed(p, best.index);
  out.strategy.answers = std::move(tb.t);
  return out;
}

}  // namespace nsg
