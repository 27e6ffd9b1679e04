#include "nsg/lp.hpp"

#include <sstream>
#include <unordered_set>

#include "nsg/errors.hpp"

namespace nsg {

void LinearProgram::validate() const {
  if (num_vars < 0) throw LpStructureError("negative variable count");
  if (static_cast<int>(objective.size()) != num_vars)
    throw LpStructureError("objective size != num_vars");
  for (int j : nonneg_vars)
    if (j < 0 || j >= num_vars)
      throw LpStructureError("nonneg index out of range: " + std::to_string(j));
  std::unordered_set<std::string> labels;
  for (const Constraint& c : constraints) {
    if (c.label.empty())
      throw LpStructureError("constraint with empty label");
    if (!labels.insert(c.label).second)
      throw LpStructureError("duplicate constraint label: " + c.label);
    std::unordered_set<int> seen;
    for (const auto& [j, coef] : c.coeffs) {
      if (j < 0 || j >= num_vars)
        throw LpStructureError("dangling variable index " + std::to_string(j) +
                               " in constraint " + c.label);
      if (!seen.insert(j).second)
        throw LpStructureError("duplicate variable index " + std::to_string(j) +
                               " in constraint " + c.label);
    }
  }
}

namespace {

const char* rel_text(Relation r) {
  switch (r) {
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

}  // namespace

std::string LinearProgram::dump() const {
  std::ostringstream os;
  os << "max:";
  for (int j = 0; j < num_vars; ++j)
    if (!objective[j].is_zero()) os << ' ' << objective[j].str() << "*x" << j;
  os << '\n';
  for (const Constraint& c : constraints) {
    os << c.label << ':';
    for (const auto& [j, coef] : c.coeffs)
      os << ' ' << coef.str() << "*x" << j;
    os << ' ' << rel_text(c.rel) << ' ' << c.rhs.str() << '\n';
  }
  os << "nonneg:";
  for (int j : nonneg_vars) os << " x" << j;
  os << '\n';
  return os.str();
}

DualCheck check_dual_feasible(const LinearProgram& lp,
                              const std::map<std::string, Rational>& dual) {
  lp.validate();
  std::unordered_set<std::string> known;
  for (const Constraint& c : lp.constraints) known.insert(c.label);
  for (const auto& [label, y] : dual)
    if (!known.count(label))
      throw std::invalid_argument("unknown constraint label: " + label);

  DualCheck out;
  const auto mult = [&](const Constraint& c) {
    auto it = dual.find(c.label);
    return it == dual.end() ? Rational(0) : it->second;
  };

  // Sign conditions per relation.
  std::vector<Rational> y(lp.constraints.size());
  for (size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& c = lp.constraints[i];
    y[i] = mult(c);
    if (c.rel == Relation::LessEq && y[i].sign() < 0) {
      out.violation = "multiplier of <= constraint " + c.label +
                      " is negative: " + y[i].str();
      return out;
    }
    if (c.rel == Relation::GreaterEq && y[i].sign() > 0) {
      out.violation = "multiplier of >= constraint " + c.label +
                      " is positive: " + y[i].str();
      return out;
    }
  }

  // Reduced costs: sum_i y_i a_ij - c_j, >= 0 for nonneg vars, == 0 for free.
  std::vector<Rational> reduced(lp.num_vars);
  for (int j = 0; j < lp.num_vars; ++j) reduced[j] = -lp.objective[j];
  for (size_t i = 0; i < lp.constraints.size(); ++i) {
    if (y[i].is_zero()) continue;
    for (const auto& [j, coef] : lp.constraints[i].coeffs)
      reduced[j] += y[i] * coef;
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    const bool nonneg = lp.nonneg_vars.count(j) != 0;
    if (nonneg ? reduced[j].sign() < 0 : !reduced[j].is_zero()) {
      out.violation = "reduced cost of x" + std::to_string(j) +
                      (nonneg ? " is negative: " : " is nonzero (free var): ") +
                      reduced[j].str();
      return out;
    }
  }

  out.feasible = true;
  for (size_t i = 0; i < lp.constraints.size(); ++i)
    out.bound += y[i] * lp.constraints[i].rhs;
  return out;
}

}  // namespace nsg
