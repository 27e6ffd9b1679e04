#include "nsg/rational.hpp"

#include <cctype>
#include <ostream>

#include "nsg/errors.hpp"

namespace nsg {

Rational::Rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
}

Rational Rational::parse(std::string_view text) {
  // Strict shape check before handing to GMP: ^-?[0-9]+(/[0-9]+)?$
  const auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const bool ok =
      slash == std::string_view::npos
          ? digits(body)
          : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok) throw ParseError("bad rational literal: '" + std::string(text) + "'");

  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0)
    throw ParseError("bad rational literal: '" + std::string(text) + "'");
  if (v.get_den() == 0)
    throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace nsg
