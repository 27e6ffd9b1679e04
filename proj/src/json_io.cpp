#include "nsg/json_io.hpp"

#include <fstream>

#include "nsg/errors.hpp"

namespace nsg {
namespace {

std::vector<int> int_vector(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw ParseError(std::string(what) + " must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

Rational rational_field(const json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + " must be a rational string");
  return Rational::parse(j.get<std::string>());
}

}  // namespace

json game_to_json(const Game& g) {
  json j;
  j["name"] = g.name;
  j["players"] = g.players();
  j["questions"] = g.question_sizes;
  j["answers"] = g.answer_sizes;
  j["pi"] = json::array();
  for (const auto& [q, p] : g.pi) {
    if (p.is_zero()) continue;
    j["pi"].push_back({{"q", q}, {"p", p.str()}});
  }
  j["V"] = json::array();
  for (const auto& [key, v] : g.payoff) {
    if (v.is_zero()) continue;
    j["V"].push_back({{"q", key.first}, {"a", key.second}, {"v", v.str()}});
  }
  return j;
}

Game game_from_json(const json& j) {
  Game g;
  try {
    g.name = j.at("name").get<std::string>();
    g.question_sizes = int_vector(j.at("questions"), "questions");
    g.answer_sizes = int_vector(j.at("answers"), "answers");
    const int players = j.at("players").get<int>();
    if (players != static_cast<int>(g.question_sizes.size()))
      throw ParseError("players field disagrees with questions list");
    for (const auto& e : j.at("pi")) {
      auto q = int_vector(e.at("q"), "pi.q");
      if (!g.pi.emplace(std::move(q), rational_field(e.at("p"), "pi.p")).second)
        throw ParseError("duplicate pi entry");
    }
    for (const auto& e : j.at("V")) {
      auto q = int_vector(e.at("q"), "V.q");
      auto a = int_vector(e.at("a"), "V.a");
      if (!g.payoff
               .emplace(std::make_pair(std::move(q), std::move(a)),
                        rational_field(e.at("v"), "V.v"))
               .second)
        throw ParseError("duplicate V entry");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed game JSON: ") + e.what());
  }
  g.validate();
  return g;
}

json behavior_to_json(const Behavior& b) {
  json j;
  j["questions"] = b.questions().sizes();
  j["answers"] = b.answers().sizes();
  j["p"] = json::array();
  std::vector<int> q(b.players(), 0);
  do {
    std::vector<int> a(b.players(), 0);
    do {
      const Rational& v = b.at(a, q);
      if (!v.is_zero()) j["p"].push_back({{"a", a}, {"q", q}, {"v", v.str()}});
    } while (b.answers().next(a));
  } while (b.questions().next(q));
  return j;
}

Behavior behavior_from_json(const json& j) {
  try {
    Behavior b(int_vector(j.at("questions"), "questions"),
               int_vector(j.at("answers"), "answers"));
    for (const auto& e : j.at("p")) {
      const auto a = int_vector(e.at("a"), "p.a");
      const auto q = int_vector(e.at("q"), "p.q");
      if (!b.answers().contains(a) || !b.questions().contains(q))
        throw ParseError("behavior cell outside the declared alphabets");
      Rational& cell = b.at(a, q);
      if (!cell.is_zero()) throw ParseError("duplicate behavior cell");
      cell = rational_field(e.at("v"), "p.v");
    }
    return b;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed behavior JSON: ") + e.what());
  }
}

json certificate_to_json(const DualCertificate& cert) {
  json j;
  j["n"] = cert.n;
  j["vars"] = json::array();
  const auto push = [&](const char* family, std::vector<int> idx, const Rational& v) {
    if (v.is_zero()) return;
    j["vars"].push_back({{"family", family}, {"idx", idx}, {"v", v.str()}});
  };
  for (const auto& [jk, v] : cert.n_vars) push("n", {jk.first, jk.second}, v);
  for (const auto& [t, v] : cert.s_vars)
    push("s", {std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t)}, v);
  for (const auto& [t, v] : cert.y_vars)
    push("y", {std::get<0>(t), std::get<1>(t), std::get<2>(t)}, v);
  for (const auto& [t, v] : cert.z_vars)
    push("z", {std::get<0>(t), std::get<1>(t), std::get<2>(t)}, v);
  return j;
}

DualCertificate certificate_from_json(const json& j) {
  DualCertificate cert;
  try {
    cert.n = j.at("n").get<int>();
    if (cert.n < 3 || cert.n % 2 == 0)
      throw ParseError("certificate n must be odd and >= 3");
    const auto bit = [](int v, const char* what) {
      if (v != 0 && v != 1) throw ParseError(std::string(what) + " must be a bit");
      return v;
    };
    const auto mod_index = [&](int v, const char* what) {
      if (v < 0 || v >= cert.n)
        throw ParseError(std::string(what) + " outside [0,n)");
      return v;
    };
    for (const auto& e : j.at("vars")) {
      const std::string family = e.at("family").get<std::string>();
      const auto idx = int_vector(e.at("idx"), "vars.idx");
      const Rational v = rational_field(e.at("v"), "vars.v");
      if (family == "n") {
        if (idx.size() != 2) throw ParseError("n variable needs idx [j,k]");
        if (!cert.n_vars.emplace(std::pair{mod_index(idx[0], "j"), mod_index(idx[1], "k")}, v)
                 .second)
          throw ParseError("duplicate certificate variable");
      } else if (family == "s") {
        if (idx.size() != 4) throw ParseError("s variable needs idx [b,c,j,k]");
        const int b = bit(idx[0], "b"), c = bit(idx[1], "c");
        const int jj = mod_index(idx[2], "j"), kk = mod_index(idx[3], "k");
        if (b == c && jj == kk)
          throw ParseError("s variable for a trivial symmetry constraint");
        if (!cert.s_vars.emplace(std::tuple{b, c, jj, kk}, v).second)
          throw ParseError("duplicate certificate variable");
      } else if (family == "y" || family == "z") {
        if (idx.size() != 3)
          throw ParseError(family + " variable needs idx [d,j,k]");
        const int d = bit(idx[0], "d");
        const int jj = idx[1], kk = mod_index(idx[2], "k");
        if (jj < 1 || jj >= cert.n)
          throw ParseError(family + " variable needs 1 <= j < n");
        auto& fam = family == "y" ? cert.y_vars : cert.z_vars;
        if (!fam.emplace(std::tuple{d, jj, kk}, v).second)
          throw ParseError("duplicate certificate variable");
      } else {
        throw ParseError("unknown certificate family: " + family);
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate JSON: ") + e.what());
  }
  return cert;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw ParseError("failed writing " + path.string());
}

}  // namespace nsg
