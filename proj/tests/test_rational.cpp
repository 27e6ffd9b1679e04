#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "nsg/errors.hpp"
#include "nsg/rational.hpp"

using nsg::Rational;

TEST_CASE("construction normalizes to lowest terms, positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), nsg::ParseError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) / Rational(2, 9) == Rational(3, 2));
  CHECK((-Rational(5, 7)).str() == "-5/7");
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  // accumulation has no drift: sum of 1/k(k+1) telescopes to 1 - 1/(N+1)
  Rational sum;
  for (long k = 1; k <= 200; ++k) sum += Rational(1, k * (k + 1));
  CHECK(sum == Rational(200, 201));
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-3, 5).sign() == -1);
  CHECK(Rational(7, 5).sign() == 1);
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
}

TEST_CASE("parse accepts num and num/den only") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("6/8") == Rational(3, 4));  // normalized on parse

  for (const char* bad : {"", "/", "1/", "/2", "1/-2", "a", "1.5", "+1",
                          " 1", "1 ", "1/2/3", "0x10", "1e3"})
    CHECK_THROWS_AS(Rational::parse(bad), nsg::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), nsg::ParseError);
}

TEST_CASE("str/parse round-trip on random values") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const long num = static_cast<long>(rng() % 20001) - 10000;
    const long den = static_cast<long>(rng() % 9999) + 1;
    const Rational r(num, den);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("field identities on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    const Rational b(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    CHECK(a + b == b + a);
    CHECK(a + b - b == a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("stream output matches str") {
  std::ostringstream os;
  os << Rational(-7, 3);
  CHECK(os.str() == "-7/3");
}
