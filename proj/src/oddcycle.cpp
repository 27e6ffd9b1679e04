#include "nsg/oddcycle.hpp"

#include <stdexcept>

#include "nsg/errors.hpp"

namespace nsg {
namespace {

void require_odd(int n) {
  if (n < 3 || n % 2 == 0)
    throw ValidationError("odd-cycle length must be odd and >= 3, got " +
                          std::to_string(n));
}

int imod(int a, int n) { return ((a % n) + n) % n; }

std::string lbl_n(int j, int k) {
  return "n(" + std::to_string(j) + "," + std::to_string(k) + ")";
}
std::string lbl_s(int b, int c, int j, int k) {
  return "s(" + std::to_string(b) + "," + std::to_string(c) + "|" +
         std::to_string(j) + "," + std::to_string(k) + ")";
}
std::string lbl_y(int d, int j, int k) {
  return "y(" + std::to_string(d) + "|" + std::to_string(j) + "," +
         std::to_string(k) + ")";
}
std::string lbl_z(int d, int j, int k) {
  return "z(" + std::to_string(d) + "|" + std::to_string(j) + "," +
         std::to_string(k) + ")";
}

}  // namespace

int reduced_var_index(int n, int b, int c, int j, int k) {
  return (j * n + k) * 4 + b * 2 + c;
}

LinearProgram build_reduced_lp(int n) {
  require_odd(n);
  LinearProgram lp;
  lp.num_vars = 4 * n * n;
  lp.objective.assign(lp.num_vars, Rational(0));
  lp.objective[reduced_var_index(n, 0, 0, 0, 0)] = Rational(1, 2);
  lp.objective[reduced_var_index(n, 1, 1, 1, 1)] = Rational(1, 2);
  for (int v = 0; v < lp.num_vars; ++v) lp.nonneg_vars.insert(v);

  const auto rv = [n](int b, int c, int j, int k) {
    return reduced_var_index(n, b, c, j, k);
  };

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Constraint c;
      c.rel = Relation::Equal;
      c.rhs = 1;
      c.label = lbl_n(j, k);
      for (int b = 0; b < 2; ++b)
        for (int cc = 0; cc < 2; ++cc) c.coeffs.emplace_back(rv(b, cc, j, k), Rational(1));
      lp.constraints.push_back(std::move(c));
    }

  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (b == c && j == k) continue;  // trivial
          Constraint con;
          con.rel = Relation::Equal;
          con.rhs = 0;
          con.label = lbl_s(b, c, j, k);
          con.coeffs.emplace_back(rv(b, c, j, k), Rational(1));
          con.coeffs.emplace_back(rv(c, b, k, j), Rational(-1));
          lp.constraints.push_back(std::move(con));
        }

  // Both no-signaling families anchor at j = 0; the anchor side carries +1
  // so the dual variables match the signs of the mu formula.
  for (int d = 0; d < 2; ++d)
    for (int j = 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Constraint con;
        con.rel = Relation::Equal;
        con.rhs = 0;
        con.label = lbl_y(d, j, k);
        con.coeffs.emplace_back(rv(0, d, 0, k), Rational(1));
        con.coeffs.emplace_back(rv(1, 1 - d, 0, k), Rational(1));
        con.coeffs.emplace_back(rv(0, d, j, imod(j + k, n)), Rational(-1));
        con.coeffs.emplace_back(rv(1, 1 - d, j, imod(j + k, n)), Rational(-1));
        lp.constraints.push_back(std::move(con));
      }
  for (int d = 0; d < 2; ++d)
    for (int j = 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Constraint con;
        con.rel = Relation::Equal;
        con.rhs = 0;
        con.label = lbl_z(d, j, k);
        con.coeffs.emplace_back(rv(0, d, 0, k), Rational(1));
        con.coeffs.emplace_back(rv(1, d, 0, k), Rational(1));
        con.coeffs.emplace_back(rv(0, d, j, k), Rational(-1));
        con.coeffs.emplace_back(rv(1, d, j, k), Rational(-1));
        lp.constraints.push_back(std::move(con));
      }
  return lp;
}

Rational reduced_ns_value(int n, const SolveOptions& opts) {
  const LpSolution sol = solve(build_reduced_lp(n), opts);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("reduced odd-cycle LP must be feasible and bounded");
  return sol.value;
}

ReducedVars ReducedVars::from_primal(int n, const std::vector<Rational>& primal) {
  require_odd(n);
  if (primal.size() != static_cast<size_t>(4 * n * n))
    throw ValidationError("primal size does not match 4n^2");
  return {n, primal};
}

const Rational& ReducedVars::at(int b, int c, int j, int k) const {
  return r[reduced_var_index(n, b, c, j, k)];
}

bool ReducedVars::valid() const {
  for (const Rational& v : r)
    if (v.sign() < 0) return false;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Rational sum;
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) sum += at(b, c, j, k);
      if (!(sum == Rational(1))) return false;
    }
  return true;
}

Rational DualCertificate::n_at(int j, int k) const {
  auto it = n_vars.find({j, k});
  return it == n_vars.end() ? Rational(0) : it->second;
}
Rational DualCertificate::s_at(int b, int c, int j, int k) const {
  auto it = s_vars.find({b, c, j, k});
  return it == s_vars.end() ? Rational(0) : it->second;
}
Rational DualCertificate::y_at(int d, int j, int k) const {
  auto it = y_vars.find({d, j, k});
  return it == y_vars.end() ? Rational(0) : it->second;
}
Rational DualCertificate::z_at(int d, int j, int k) const {
  auto it = z_vars.find({d, j, k});
  return it == z_vars.end() ? Rational(0) : it->second;
}

std::map<std::string, Rational> DualCertificate::to_multipliers() const {
  const Rational scale(1, 2L * n);
  std::map<std::string, Rational> mult;
  for (const auto& [jk, v] : n_vars)
    if (!v.is_zero()) mult[lbl_n(jk.first, jk.second)] = v * scale;
  for (const auto& [t, v] : s_vars)
    if (!v.is_zero())
      mult[lbl_s(std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t))] =
          v * scale;
  for (const auto& [t, v] : y_vars)
    if (!v.is_zero())
      mult[lbl_y(std::get<0>(t), std::get<1>(t), std::get<2>(t))] = v * scale;
  for (const auto& [t, v] : z_vars)
    if (!v.is_zero())
      mult[lbl_z(std::get<0>(t), std::get<1>(t), std::get<2>(t))] = v * scale;
  return mult;
}

CertificateBuilder::CertificateBuilder(int n) : n_(n) {
  require_odd(n);
  cert_.n = n;
}

void CertificateBuilder::put_n(int j, int k, Rational v, const std::string& line) {
  assign(lbl_n(imod(j, n_), imod(k, n_)), line, std::move(v),
         cert_.n_vars[{imod(j, n_), imod(k, n_)}]);
}
void CertificateBuilder::put_s(int b, int c, int j, int k, Rational v,
                               const std::string& line) {
  assign(lbl_s(b, c, imod(j, n_), imod(k, n_)), line, std::move(v),
         cert_.s_vars[{b, c, imod(j, n_), imod(k, n_)}]);
}
void CertificateBuilder::put_y(int d, int j, int k, Rational v,
                               const std::string& line) {
  assign(lbl_y(d, imod(j, n_), imod(k, n_)), line, std::move(v),
         cert_.y_vars[{d, imod(j, n_), imod(k, n_)}]);
}
void CertificateBuilder::put_z(int d, int j, int k, Rational v,
                               const std::string& line) {
  assign(lbl_z(d, imod(j, n_), imod(k, n_)), line, std::move(v),
         cert_.z_vars[{d, imod(j, n_), imod(k, n_)}]);
}

DualCertificate CertificateBuilder::take() && { return std::move(cert_); }

void CertificateBuilder::assign(const std::string& label, const std::string& line,
                                Rational v, Rational& slot) {
  auto prev = sources_.find(label);
  if (prev != sources_.end()) {
    if (!(slot == v))
      throw CertificateError("certificate collision at " + label + ": line '" +
                             prev->second + "' gives " + slot.str() + ", line '" +
                             line + "' gives " + v.str());
    return;  // same value twice is harmless
  }
  sources_.emplace(label, line);
  slot = std::move(v);
}

namespace {

int sgn_pow(int e) { return e % 2 == 0 ? 1 : -1; }  // (-1)^e for e >= 0

}  // namespace

DualCertificate closed_form_certificate(int n) {
  require_odd(n);
  CertificateBuilder cb(n);
  const Rational half(1, 2);

  cb.put_n(0, 0, Rational(2 * n - 1), "n(0,0) = 2n-1");

  cb.put_s(0, 1, 0, 0, Rational(3L * n, 2), "s(0,1|0,0) = 3n/2");
  cb.put_s(0, 1, 1, 0, Rational(-n + 1), "s(0,1|1,0) = -n+1");
  cb.put_s(0, 0, 0, 1, Rational(-n + 1), "s(0,0|0,1) = -n+1");
  cb.put_s(0, 1, 1, 1, Rational(-n, 2), "s(0,1|1,1) = -n/2");
  for (int j = 1; j <= n - 1; ++j) {
    cb.put_s(0, 0, j, j + 1, Rational(sgn_pow(j)), "s(0,0|j,j+1) = (-1)^j");
    cb.put_s(0, 1, j, j + 1, Rational(-sgn_pow(j)), "s(0,1|j,j+1) = -(-1)^j");
  }

  cb.put_y(0, 1, 0, Rational(-2 * n + 3), "y(0|1,0) = -2n+3");
  for (int k = 1; k <= n - 1; ++k)
    cb.put_y(0, 1, k,
             Rational(-n + k) + Rational(5, 2) + Rational(sgn_pow(k)) * half,
             "y(0|1,k) = -n+k+5/2+(-1)^k/2");
  cb.put_y(1, 1, 0, Rational(3) - Rational(3L * n, 2), "y(1|1,0) = 3-3n/2");
  cb.put_y(1, 1, 1, Rational(-n + 4), "y(1|1,1) = -n+4");
  for (int j = 2; j <= n - 1; ++j)
    cb.put_y(1, j, 1, Rational(-sgn_pow(j)), "y(1|j,1) = -(-1)^j");
  for (int k = 2; k <= n - 2; ++k)
    cb.put_y(1, 1, k,
             Rational(-n + k) + Rational(5, 2) + Rational(sgn_pow(k)) * half,
             "y(1|1,k) = -n+k+5/2+(-1)^k/2");
  cb.put_y(1, 1, n - 1, Rational(-n + 3), "y(1|1,n-1) = -n+3");
  for (int j = 2; j <= n - 1; ++j)
    cb.put_y(1, j, n - 1, Rational(1 - sgn_pow(j)), "y(1|j,n-1) = 1-(-1)^j");

  cb.put_z(0, 1, 0, Rational(n - 3), "z(0|1,0) = n-3");
  cb.put_z(0, 1, 1, Rational(2 * n - 3), "z(0|1,1) = 2n-3");
  cb.put_z(0, 1, 2, Rational(n - 4), "z(0|1,2) = n-4");
  for (int j = 2; j <= n - 1; ++j) {
    cb.put_z(0, j, j - 1, Rational(-1), "z(0|j,j-1) = -1");
    cb.put_z(0, j, j + 1, Rational(sgn_pow(j)), "z(0|j,j+1) = (-1)^j");
  }
  for (int k = 3; k <= n - 1; ++k)
    cb.put_z(0, 1, k,
             Rational(n - k) - Rational(3, 2) + Rational(sgn_pow(k)) * half,
             "z(0|1,k) = n-k-3/2+(-1)^k/2");
  for (int j = 1; j <= n - 1; ++j)
    cb.put_z(1, j, j - 1, Rational(-1 + sgn_pow(j)), "z(1|j,j-1) = -1+(-1)^j");
  for (int k = 1; k <= n - 1; ++k)
    cb.put_z(1, 1, k,
             Rational(n - k) - Rational(3, 2) + Rational(sgn_pow(k)) * half,
             "z(1|1,k) = n-k-3/2+(-1)^k/2");

  return std::move(cb).take();
}

Rational mu(const DualCertificate& cert, int b, int c, int j, int k) {
  const int n = cert.n;
  j = imod(j, n);
  k = imod(k, n);
  Rational m = cert.n_at(j, k) + cert.s_at(b, c, j, k) - cert.s_at(c, b, k, j);
  const int d = b ^ c;
  if (j == 0) {
    for (int jp = 1; jp < n; ++jp)
      m += cert.y_at(d, jp, k) + cert.z_at(c, jp, k);
  } else {
    m -= cert.y_at(d, j, imod(k - j, n)) + cert.z_at(c, j, k);
  }
  return m;
}

namespace {

// The mu values the closed-form table is expected to produce; deviations
// are warnings.
Rational expected_mu(int n, int b, int c, int j, int k) {
  if (b == 0 && c == 0 && j == 0 && k == 0) return Rational(n);
  if (b == 1 && c == 1 && j == 1 && k == 1) return Rational(n);
  if (b == 0 && c == 1 && j == 0 && k == 0) return Rational(2 * n);
  if (b == 1 && c == 0 && j == 0 && k == 1) return Rational(2 * n - 2);
  if (b == 0 && c == 0 && j >= 1 && k == imod(j - 1, n))
    return Rational(1 + (j % 2 == 0 ? 1 : -1));
  if (b == 1 && c == 1 && k >= 1 && j == imod(k + 1, n))
    return Rational(1 + (k % 2 == 0 ? 1 : -1));
  return Rational(0);
}

}  // namespace

CertCheck verify_certificate(const DualCertificate& cert) {
  require_odd(cert.n);
  const int n = cert.n;
  CertCheck out;
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Rational m = mu(cert, b, c, j, k);
          const bool objective_cell =
              (b == 0 && c == 0 && j == 0 && k == 0) ||
              (b == 1 && c == 1 && j == 1 && k == 1);
          const Rational required = objective_cell ? Rational(n) : Rational(0);
          if (m < required) {
            out.violation = "mu(" + std::to_string(b) + "," + std::to_string(c) +
                            "|" + std::to_string(j) + "," + std::to_string(k) +
                            ") = " + m.str() + " < " + required.str();
            return out;
          }
          const Rational want = expected_mu(n, b, c, j, k);
          if (!(m == want))
            out.warnings.push_back(
                "mu(" + std::to_string(b) + "," + std::to_string(c) + "|" +
                std::to_string(j) + "," + std::to_string(k) + ") = " + m.str() +
                " differs from the reported table value " + want.str());
        }
  out.valid = true;
  for (const auto& [jk, v] : cert.n_vars) out.bound += v;
  out.bound = out.bound / Rational(2L * n);
  return out;
}

}  // namespace nsg
