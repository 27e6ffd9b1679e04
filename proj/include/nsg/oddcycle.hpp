#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "nsg/lp.hpp"
#include "nsg/simplex.hpp"

namespace nsg {

/// Variable index of r(b,c|j,k) in the reduced LP: (j*n + k)*4 + b*2 + c.
int reduced_var_index(int n, int b, int c, int j, int k);

/// Symmetry-reduced LP for the first extension of the odd-cycle game:
///   max (1/2) [ r(0,0|0,0) + r(1,1|1,1) ]   over r(b,c|j,k) >= 0
/// subject to, with all index sums mod n,
///   n(j,k):     sum_{b,c} r(b,c|j,k) = 1
///   s(b,c|j,k): r(b,c|j,k) - r(c,b|k,j) = 0        (skipped when trivial)
///   y(d|j,k):   [r(0,d|0,k) + r(1,1-d|0,k)] - [r(0,d|j,j+k) + r(1,1-d|j,j+k)] = 0
///   z(d|j,k):   [r(0,d|0,k) + r(1,d|0,k)]  - [r(0,d|j,k)   + r(1,d|j,k)]     = 0
/// for d in {0,1}, 1 <= j < n, 0 <= k < n. Constraint labels spell exactly
/// these names; they key the dual multipliers of the closed-form
/// certificate.
LinearProgram build_reduced_lp(int n);

/// Optimal value of build_reduced_lp(n), solved exactly.
Rational reduced_ns_value(int n, const SolveOptions& opts = {});

/// Primal point of the reduced LP, for inspection and tests.
struct ReducedVars {
  int n = 0;
  std::vector<Rational> r;  // reduced_var_index layout

  static ReducedVars from_primal(int n, const std::vector<Rational>& primal);
  const Rational& at(int b, int c, int j, int k) const;
  /// All entries nonnegative and sum_{b,c} r(b,c|j,k) = 1 for every (j,k).
  bool valid() const;
};

/// Closed-form dual solution of the reduced LP. Its variables are scaled
/// copies of the standard LP multipliers: the dual objective carries a
/// 1/(2n) prefactor, so multiplier(label) = value / (2n).
struct DualCertificate {
  int n = 0;
  std::map<std::pair<int, int>, Rational> n_vars;             // (j,k)
  std::map<std::tuple<int, int, int, int>, Rational> s_vars;  // (b,c,j,k)
  std::map<std::tuple<int, int, int>, Rational> y_vars;       // (d,j,k), 1 <= j < n
  std::map<std::tuple<int, int, int>, Rational> z_vars;       // (d,j,k), 1 <= j < n

  Rational n_at(int j, int k) const;
  Rational s_at(int b, int c, int j, int k) const;
  Rational y_at(int d, int j, int k) const;
  Rational z_at(int d, int j, int k) const;

  /// Standard dual multipliers keyed by the reduced-LP constraint labels
  /// (each certificate value divided by 2n); zero entries are omitted.
  std::map<std::string, Rational> to_multipliers() const;
};

/// Incremental certificate assembly that remembers which table line wrote
/// each variable. Indices are reduced mod n on the way in. Assigning the
/// same variable twice is fine when the values agree; a disagreement throws
/// CertificateError naming both source lines.
class CertificateBuilder {
 public:
  explicit CertificateBuilder(int n);

  void put_n(int j, int k, Rational v, const std::string& line);
  void put_s(int b, int c, int j, int k, Rational v, const std::string& line);
  void put_y(int d, int j, int k, Rational v, const std::string& line);
  void put_z(int d, int j, int k, Rational v, const std::string& line);

  DualCertificate take() &&;

 private:
  void assign(const std::string& label, const std::string& line, Rational v,
              Rational& slot);

  int n_;
  DualCertificate cert_;
  std::map<std::string, std::string> sources_;
};

/// Materializes the closed-form certificate table for odd n >= 3, reducing
/// every index mod n; empty ranges contribute nothing. Throws
/// CertificateError, naming both source lines, if two table lines assign
/// different values to one variable.
DualCertificate closed_form_certificate(int n);

/// Reduced cost of r(b,c|j,k) under the certificate (scaled by 2n):
///   mu(b,c|j,k) = n(j,k) + s(b,c|j,k) - s(c,b|k,j)
///                 + [j=0] sum_{j'=1}^{n-1} ( y(b^c|j',k) + z(c|j',k) )
///                 - [j!=0] ( y(b^c|j,k-j) + z(c|j,k) )
/// with index arithmetic mod n.
Rational mu(const DualCertificate& cert, int b, int c, int j, int k);

struct CertCheck {
  bool valid = false;
  Rational bound;                      // (1/2n) sum_{j,k} n(j,k) when valid
  std::string violation;               // first failed dual constraint
  std::vector<std::string> warnings;   // mismatches against the expected
                                       // mu table; harmless for the bound
};

/// Arithmetic-only dual feasibility check: mu(0,0|0,0) >= n,
/// mu(1,1|1,1) >= n and mu(b,c|j,k) >= 0 everywhere. Also cross-checks the
/// expected mu pattern (n, 2n, 2n-2, 1 +/- 1, zero elsewhere) and reports
/// deviations as warnings, distinct from a bound failure. Performs no LP
/// solve.
CertCheck verify_certificate(const DualCertificate& cert);

}  // namespace nsg
