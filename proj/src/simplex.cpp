#include "nsg/simplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsg/errors.hpp"

namespace nsg {
namespace {

// row -= f * prow over the pivot row's nonzero columns. The factor is copied
// up front because one of the touched columns is the one it was read from.
void eliminate_row(std::vector<Rational>& row, const std::vector<Rational>& prow,
                   const std::vector<int>& pivcols, const Rational& factor) {
  mpq_t f, tmp;
  mpq_init(f);
  mpq_init(tmp);
  mpq_set(f, factor.raw());
  for (int j : pivcols) {
    mpq_mul(tmp, f, prow[j].raw());
    mpq_sub(row[j].raw(), row[j].raw(), tmp);
  }
  mpq_clear(f);
  mpq_clear(tmp);
}

class Simplex {
 public:
  Simplex(const LinearProgram& lp, const SolveOptions& opts) : lp_(lp), opts_(opts) {
    build();
  }

  LpSolution run() {
    LpSolution sol;
    if (has_artificials_) {
      set_phase1_costs();
      rebuild_zrow();
      if (!iterate(/*phase1=*/true))
        throw std::logic_error("phase-1 objective cannot be unbounded");
      if (zrow_[rhs_].sign() < 0) {  // sum of artificials stayed positive
        sol.status = LpStatus::Infeasible;
        return sol;
      }
      drive_out_artificials();
    }
    set_phase2_costs();
    rebuild_zrow();
    if (!iterate(/*phase1=*/false)) {
      sol.status = LpStatus::Unbounded;
      return sol;
    }
    extract(sol);
    return sol;
  }

 private:
  void build() {
    lp_.validate();
    const int m = static_cast<int>(lp_.constraints.size());
    if (lp_.num_vars > opts_.max_vars || m > opts_.max_constraints)
      throw BudgetError("LP exceeds solver budget: " + std::to_string(lp_.num_vars) +
                        " vars, " + std::to_string(m) + " constraints");
    m_ = m;

    pos_col_.assign(lp_.num_vars, -1);
    neg_col_.assign(lp_.num_vars, -1);
    int nc = 0;
    for (int j = 0; j < lp_.num_vars; ++j) {
      pos_col_[j] = nc++;
      if (!lp_.nonneg_vars.count(j)) neg_col_[j] = nc++;  // free var split
    }

    slack_col_.assign(m_, -1);
    art_col_.assign(m_, -1);
    sigma_.assign(m_, 1);
    rel_.assign(m_, Relation::Equal);
    for (int i = 0; i < m_; ++i) {
      rel_[i] = lp_.constraints[i].rel;
      if (lp_.constraints[i].rhs.sign() < 0) {
        sigma_[i] = -1;
        if (rel_[i] == Relation::LessEq) rel_[i] = Relation::GreaterEq;
        else if (rel_[i] == Relation::GreaterEq) rel_[i] = Relation::LessEq;
      }
      if (rel_[i] != Relation::Equal) slack_col_[i] = nc++;
    }
    for (int i = 0; i < m_; ++i)
      if (rel_[i] != Relation::LessEq) art_col_[i] = nc++;
    n_cols_ = nc;
    rhs_ = nc;
    has_artificials_ = false;
    artificial_.assign(n_cols_, 0);
    for (int i = 0; i < m_; ++i)
      if (art_col_[i] >= 0) {
        artificial_[art_col_[i]] = 1;
        has_artificials_ = true;
      }

    T_.assign(m_, std::vector<Rational>(n_cols_ + 1));
    basis_.assign(m_, -1);
    active_.assign(m_, 1);
    for (int i = 0; i < m_; ++i) {
      const Constraint& c = lp_.constraints[i];
      auto& row = T_[i];
      for (const auto& [j, coef] : c.coeffs) {
        const Rational v = sigma_[i] == 1 ? coef : -coef;
        row[pos_col_[j]] += v;
        if (neg_col_[j] >= 0) row[neg_col_[j]] -= v;
      }
      row[rhs_] = sigma_[i] == 1 ? c.rhs : -c.rhs;
      if (slack_col_[i] >= 0)
        row[slack_col_[i]] = rel_[i] == Relation::LessEq ? Rational(1) : Rational(-1);
      if (art_col_[i] >= 0) {
        row[art_col_[i]] = 1;
        basis_[i] = art_col_[i];
      } else {
        basis_[i] = slack_col_[i];
      }
    }
    cost_.assign(n_cols_, Rational(0));
    zrow_.assign(n_cols_ + 1, Rational(0));
    bland_ = opts_.rule == PivotRule::Bland;
  }

  void set_phase1_costs() {
    std::fill(cost_.begin(), cost_.end(), Rational(0));
    for (int j = 0; j < n_cols_; ++j)
      if (artificial_[j]) cost_[j] = -1;  // maximize minus the artificial sum
  }

  void set_phase2_costs() {
    std::fill(cost_.begin(), cost_.end(), Rational(0));
    for (int j = 0; j < lp_.num_vars; ++j) {
      cost_[pos_col_[j]] = lp_.objective[j];
      if (neg_col_[j] >= 0) cost_[neg_col_[j]] = -lp_.objective[j];
    }
  }

  // zrow_[j] = sum_i cost(basis_i) T_[i][j] - cost_[j]; the rhs slot carries
  // the objective value of the current basic solution.
  void rebuild_zrow() {
    for (int j = 0; j < n_cols_; ++j) zrow_[j] = -cost_[j];
    zrow_[rhs_] = 0;
    for (int i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Rational& cb = cost_[basis_[i]];
      if (cb.is_zero()) continue;
      for (int j = 0; j <= n_cols_; ++j) {
        if (!T_[i][j].is_zero()) zrow_[j] += cb * T_[i][j];
      }
    }
  }

  int entering(bool phase1) const {
    int best = -1;
    for (int j = 0; j < n_cols_; ++j) {
      if (artificial_[j] && !phase1) continue;
      if (zrow_[j].sign() >= 0) continue;
      if (bland_) return j;
      if (best < 0 || zrow_[j] < zrow_[best]) best = j;
    }
    return best;
  }

  int leaving(int s) const {
    int best = -1;
    Rational best_ratio;
    for (int i = 0; i < m_; ++i) {
      if (!active_[i] || T_[i][s].sign() <= 0) continue;
      Rational ratio = T_[i][rhs_] / T_[i][s];
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(int r, int s) {
    auto& prow = T_[r];
    if (!(prow[s] == Rational(1))) {
      const Rational inv = prow[s];  // copy: the loop overwrites prow[s]
      for (int j = 0; j <= n_cols_; ++j)
        if (!prow[j].is_zero()) prow[j] /= inv;
    }
    pivcols_.clear();
    for (int j = 0; j <= n_cols_; ++j)
      if (!prow[j].is_zero()) pivcols_.push_back(j);

    // Sparse pivot rows are cheaper than the fork/join they would trigger.
    const bool go_parallel =
        opts_.parallel && m_ >= 128 && pivcols_.size() >= 64;
#pragma omp parallel for schedule(dynamic, 16) if (go_parallel)
    for (int i = 0; i < m_; ++i) {
      if (i == r || !active_[i] || T_[i][s].is_zero()) continue;
      eliminate_row(T_[i], prow, pivcols_, T_[i][s]);
    }
    if (!zrow_[s].is_zero()) eliminate_row(zrow_, prow, pivcols_, zrow_[s]);
    basis_[r] = s;
  }

  // Pivots until optimal; returns false when the objective is unbounded.
  bool iterate(bool phase1) {
    Rational prev_obj = zrow_[rhs_];
    long stall = 0;
    const long stall_limit = 2L * m_ + 100;
    for (;;) {
      const int s = entering(phase1);
      if (s < 0) return true;
      const int r = leaving(s);
      if (r < 0) return false;
      pivot(r, s);
      if (!bland_) {
        if (zrow_[rhs_] == prev_obj) {
          if (++stall > stall_limit) bland_ = true;  // anti-cycling fallback
        } else {
          stall = 0;
          prev_obj = zrow_[rhs_];
        }
      }
    }
  }

  // After a feasible phase 1, pivot basic artificials out on any nonzero
  // non-artificial column; rows with none are redundant and go inactive.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!active_[i] || !artificial_[basis_[i]]) continue;
      int col = -1;
      for (int j = 0; j < n_cols_ && col < 0; ++j)
        if (!artificial_[j] && !T_[i][j].is_zero()) col = j;
      if (col >= 0)
        pivot(i, col);  // degenerate: the artificial sits at value zero
      else
        active_[i] = 0;
    }
  }

  void extract(LpSolution& sol) const {
    sol.status = LpStatus::Optimal;
    std::vector<Rational> x_int(n_cols_);
    for (int i = 0; i < m_; ++i)
      if (active_[i]) x_int[basis_[i]] = T_[i][rhs_];
    sol.primal.assign(lp_.num_vars, Rational(0));
    for (int j = 0; j < lp_.num_vars; ++j) {
      sol.primal[j] = x_int[pos_col_[j]];
      if (neg_col_[j] >= 0) sol.primal[j] -= x_int[neg_col_[j]];
    }
    sol.value = 0;
    for (int j = 0; j < lp_.num_vars; ++j)
      if (!lp_.objective[j].is_zero()) sol.value += lp_.objective[j] * sol.primal[j];

    // Multiplier of row i is the reduced cost of its marker column: the
    // slack (+1) or surplus (-1) for inequalities, the artificial for
    // equalities. Rows flipped during normalization flip the sign back.
    // This applies to deactivated redundant rows as well: their share of
    // the dual weight is still carried by their marker column.
    for (int i = 0; i < m_; ++i) {
      Rational y;
      if (slack_col_[i] >= 0) {
        y = zrow_[slack_col_[i]];
        if (rel_[i] == Relation::GreaterEq) y = -y;
      } else {
        y = zrow_[art_col_[i]];
      }
      if (sigma_[i] < 0) y = -y;
      sol.dual[lp_.constraints[i].label] = std::move(y);
    }
    verify(sol);
  }

  // Exactness guard: the primal must satisfy every constraint with zero
  // error and the recovered dual must certify the same objective value.
  void verify(const LpSolution& sol) const {
    for (const Constraint& c : lp_.constraints) {
      Rational lhs;
      for (const auto& [j, coef] : c.coeffs) lhs += coef * sol.primal[j];
      const bool ok = c.rel == Relation::LessEq   ? lhs <= c.rhs
                      : c.rel == Relation::Equal  ? lhs == c.rhs
                                                  : lhs >= c.rhs;
      if (!ok) throw std::logic_error("simplex bug: primal violates " + c.label);
    }
    for (int j : lp_.nonneg_vars)
      if (sol.primal[j].sign() < 0)
        throw std::logic_error("simplex bug: negative primal x" + std::to_string(j));
    const DualCheck dc = check_dual_feasible(lp_, sol.dual);
    if (!dc.feasible)
      throw std::logic_error("simplex bug: recovered dual infeasible: " + dc.violation);
    if (!(dc.bound == sol.value))
      throw std::logic_error("simplex bug: duality gap " + sol.value.str() +
                             " vs " + dc.bound.str());
  }

  const LinearProgram& lp_;
  SolveOptions opts_;
  int m_ = 0, n_cols_ = 0, rhs_ = 0;
  bool has_artificials_ = false, bland_ = true;
  std::vector<int> pos_col_, neg_col_, slack_col_, art_col_, sigma_;
  std::vector<Relation> rel_;
  std::vector<char> artificial_, active_;
  std::vector<int> basis_;
  std::vector<std::vector<Rational>> T_;
  std::vector<Rational> zrow_, cost_;
  std::vector<int> pivcols_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp, const SolveOptions& opts) {
  return Simplex(lp, opts).run();
}

}  // namespace nsg
