#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nsg {

/// Arbitrary-precision exact rational, the sole numeric type in all domain
/// computations. Always stored in lowest terms with positive denominator;
/// arithmetic is exact and never rounds. Backed by GMP's mpq.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}  // NOLINT: implicit by design, enables r * 2
  Rational(long num, long den);
  explicit Rational(const mpz_class& num) : v_(num) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "num" or "num/den" (decimal digits, optional leading '-').
  /// Throws ParseError on any other shape or a zero denominator.
  static Rational parse(std::string_view text);

  /// Lowest-terms text form, "num/den" with "/den" omitted when den == 1.
  /// parse(str()) reproduces the identical value.
  std::string str() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.v_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  /// Direct mpq access for the tableau elimination kernel.
  mpq_srcptr raw() const { return v_.get_mpq_t(); }
  mpq_ptr raw() { return v_.get_mpq_t(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Least common multiple of two positive integers.
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace nsg
