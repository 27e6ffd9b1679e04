#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsg/behavior.hpp"
#include "nsg/errors.hpp"

using namespace nsg;

namespace {

Behavior pr_box() {
  // p(a1,a2|q1,q2) = 1/2 when a1 xor a2 = q1 and q2, else 0
  Behavior b({2, 2}, {2, 2});
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
          if ((a1 ^ a2) == (q1 & q2))
            b.at(std::vector<int>{a1, a2}, std::vector<int>{q1, q2}) = Rational(1, 2);
  return b;
}

Behavior deterministic_zeros(int players) {
  Behavior b(std::vector<int>(players, 2), std::vector<int>(players, 2));
  std::vector<int> q(players, 0);
  const std::vector<int> zero(players, 0);
  do {
    b.at(zero, q) = 1;
  } while (b.questions().next(q));
  return b;
}

}  // namespace

TEST_CASE("uniform behaviors pass the all-subset validator") {
  for (int players : {2, 3, 4}) {
    const Behavior b = Behavior::uniform(std::vector<int>(players, 2),
                                         std::vector<int>(players, 2));
    CHECK_FALSE(validate_behavior(b).has_value());
  }
}

TEST_CASE("the PR box is a valid no-signaling behavior") {
  CHECK_FALSE(validate_behavior(pr_box()).has_value());
}

TEST_CASE("a tampered table fails no-signaling with the culprit subset") {
  Behavior b = Behavior::uniform({2, 2}, {2, 2});
  b.at(std::vector<int>{0, 0}, std::vector<int>{0, 0}) += Rational(1, 8);
  b.at(std::vector<int>{0, 1}, std::vector<int>{0, 0}) -= Rational(1, 8);
  const auto bad = validate_behavior(b);
  REQUIRE(bad.has_value());
  // party 2's marginal now depends on party 1's question
  CHECK(bad->subset == std::vector<int>{0});
  CHECK(bad->what.find("no-signaling") != std::string::npos);
}

TEST_CASE("positivity and normalization failures are reported") {
  SUBCASE("negative cell") {
    Behavior b = Behavior::uniform({2, 2}, {2, 2});
    b.at(std::vector<int>{0, 0}, std::vector<int>{0, 0}) = Rational(-1, 4);
    const auto bad = validate_behavior(b);
    REQUIRE(bad.has_value());
    CHECK(bad->what.find("negative") != std::string::npos);
  }
  SUBCASE("cells not summing to one") {
    Behavior b = Behavior::uniform({2, 2}, {2, 2});
    b.at(std::vector<int>{1, 1}, std::vector<int>{1, 0}) = Rational(1);
    const auto bad = validate_behavior(b);
    REQUIRE(bad.has_value());
    CHECK(bad->what.find("normalization") != std::string::npos);
  }
}

TEST_CASE("chsh expectation of the canonical behaviors") {
  CHECK(chsh_expectation(pr_box(), 0, 1) == Rational(4));
  CHECK(chsh_expectation(Behavior::uniform({2, 2}, {2, 2}), 0, 1) == Rational(0));
  CHECK(chsh_expectation(deterministic_zeros(2), 0, 1) == Rational(2));
}

TEST_CASE("chsh expectation works on any party pair of a larger behavior") {
  const Behavior b = deterministic_zeros(3);
  CHECK(chsh_expectation(b, 0, 1) == Rational(2));
  CHECK(chsh_expectation(b, 0, 2) == Rational(2));
  CHECK(chsh_expectation(b, 1, 2) == Rational(2));
}

TEST_CASE("chsh expectation rejects bad party choices") {
  const Behavior b = Behavior::uniform({2, 2}, {2, 2});
  CHECK_THROWS_AS(chsh_expectation(b, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(chsh_expectation(b, 0, 5), std::invalid_argument);
  const Behavior one_q = Behavior::uniform({2, 1}, {2, 2});
  CHECK_THROWS_AS(chsh_expectation(one_q, 0, 1), std::invalid_argument);
  const Behavior wide = Behavior::uniform({2, 2}, {2, 3});
  CHECK_THROWS_AS(chsh_expectation(wide, 0, 1), std::invalid_argument);
}

TEST_CASE("chsh expectation detects a signaling marginal instead of guessing") {
  // parties (0,1) see a PR box when party 2 asks 1, independent coins when
  // party 2 asks 0: every slice is normalized but the AB marginal moves
  // with q3.
  Behavior b({2, 2, 2}, {2, 2, 2});
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      for (int q3 = 0; q3 < 2; ++q3)
        for (int a1 = 0; a1 < 2; ++a1)
          for (int a2 = 0; a2 < 2; ++a2)
            for (int a3 = 0; a3 < 2; ++a3) {
              const std::vector<int> q{q1, q2, q3}, a{a1, a2, a3};
              if (q3 == 0)
                b.at(a, q) = Rational(1, 8);
              else if ((a1 ^ a2) == (q1 & q2))
                b.at(a, q) = Rational(1, 4);
            }
  CHECK(validate_behavior(b).has_value());  // it signals
  CHECK_THROWS_AS(chsh_expectation(b, 0, 1), SignalingError);
}
