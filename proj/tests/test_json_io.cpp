#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "nsg/errors.hpp"
#include "nsg/json_io.hpp"
#include "nsg/ns_lp.hpp"

using namespace nsg;

TEST_CASE("game round-trips to structural equality") {
  for (const Game& g : {make_chsh(), make_chsh_triangle(), make_odd_cycle(3),
                        extend(make_odd_cycle(3), 1)}) {
    const Game back = game_from_json(game_to_json(g));
    CHECK(back.name == g.name);
    CHECK(back.question_sizes == g.question_sizes);
    CHECK(back.answer_sizes == g.answer_sizes);
    CHECK(back.pi == g.pi);
    CHECK(back.payoff == g.payoff);
  }
}

TEST_CASE("game json carries exact rational strings") {
  const json j = game_to_json(make_chsh());
  REQUIRE(j.at("pi").size() == 4);
  for (const auto& e : j.at("pi")) CHECK(e.at("p") == "1/4");
  CHECK(j.at("players") == 2);
}

TEST_CASE("game parser rejects broken inputs") {
  const json good = game_to_json(make_chsh());
  SUBCASE("non-normalized pi") {
    json j = good;
    j["pi"][0]["p"] = "1/2";
    CHECK_THROWS_AS(game_from_json(j), ValidationError);
  }
  SUBCASE("duplicate pi entry") {
    json j = good;
    j["pi"].push_back(j["pi"][0]);
    CHECK_THROWS_AS(game_from_json(j), ParseError);
  }
  SUBCASE("bad rational literal") {
    json j = good;
    j["pi"][0]["p"] = "0.25";
    CHECK_THROWS_AS(game_from_json(j), ParseError);
  }
  SUBCASE("players mismatch") {
    json j = good;
    j["players"] = 3;
    CHECK_THROWS_AS(game_from_json(j), ParseError);
  }
  SUBCASE("missing key") {
    json j = good;
    j.erase("V");
    CHECK_THROWS_AS(game_from_json(j), ParseError);
  }
  SUBCASE("tuple outside alphabets") {
    json j = good;
    j["V"][0]["a"] = {0, 7};
    CHECK_THROWS_AS(game_from_json(j), ValidationError);
  }
  SUBCASE("payoff above one") {
    json j = good;
    j["V"][0]["v"] = "7/2";
    CHECK_THROWS_AS(game_from_json(j), ValidationError);
  }
}

TEST_CASE("behavior round-trip, sparse zeros omitted") {
  const NsResult res = ns_value(make_chsh());
  const json j = behavior_to_json(res.behavior);
  CHECK(j.at("p").size() < res.behavior.cells());  // optimizer has zero cells
  const Behavior back = behavior_from_json(j);
  CHECK(back == res.behavior);

  const Behavior uniform = Behavior::uniform({2, 2}, {2, 2});
  CHECK(behavior_from_json(behavior_to_json(uniform)) == uniform);
}

TEST_CASE("behavior parser rejects bad cells") {
  const json good = behavior_to_json(Behavior::uniform({2, 2}, {2, 2}));
  SUBCASE("out-of-range tuple") {
    json j = good;
    j["p"][0]["a"] = {0, 9};
    CHECK_THROWS_AS(behavior_from_json(j), ParseError);
  }
  SUBCASE("duplicate cell") {
    json j = good;
    j["p"].push_back(j["p"][0]);
    CHECK_THROWS_AS(behavior_from_json(j), ParseError);
  }
}

TEST_CASE("certificate round-trip preserves the multipliers") {
  for (int n : {3, 5, 9}) {
    const DualCertificate cert = closed_form_certificate(n);
    const DualCertificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.n == n);
    CHECK(back.to_multipliers() == cert.to_multipliers());
    const CertCheck a = verify_certificate(cert);
    const CertCheck b = verify_certificate(back);
    CHECK(a.valid == b.valid);
    CHECK(a.bound == b.bound);
  }
}

TEST_CASE("certificate parser validates families and index ranges") {
  const json good = certificate_to_json(closed_form_certificate(3));
  SUBCASE("unknown family") {
    json j = good;
    j["vars"][0]["family"] = "w";
    CHECK_THROWS_AS(certificate_from_json(j), ParseError);
  }
  SUBCASE("y with j = 0 has no matching constraint") {
    json j = good;
    j["vars"].push_back({{"family", "y"}, {"idx", {0, 0, 1}}, {"v", "1"}});
    CHECK_THROWS_AS(certificate_from_json(j), ParseError);
  }
  SUBCASE("trivial s variable") {
    json j = good;
    j["vars"].push_back({{"family", "s"}, {"idx", {0, 0, 1, 1}}, {"v", "1"}});
    CHECK_THROWS_AS(certificate_from_json(j), ParseError);
  }
  SUBCASE("even n") {
    json j = good;
    j["n"] = 4;
    CHECK_THROWS_AS(certificate_from_json(j), ParseError);
  }
  SUBCASE("duplicate variable") {
    json j = good;
    j["vars"].push_back(j["vars"][0]);
    CHECK_THROWS_AS(certificate_from_json(j), ParseError);
  }
}

TEST_CASE("file round-trip") {
  namespace fs = std::filesystem;
  const fs::path p = fs::temp_directory_path() / "nsg_test_game.json";
  const Game g = make_odd_cycle(5);
  write_json_file(p, game_to_json(g));
  const Game back = game_from_json(read_json_file(p));
  CHECK(back.pi == g.pi);
  fs::remove(p);
  CHECK_THROWS_AS(read_json_file(p), ParseError);
}
