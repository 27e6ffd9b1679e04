// nsgame: exact classical / no-signaling values of multiplayer nonlocal
// games, the CHSH monogamy tradeoff frontier, and the odd-cycle extension
// with its closed-form dual certificate. All numeric output is exact
// rational text; exit codes are a stable contract:
//   0 success, 2 input error, 3 budget exceeded, 4 invalid certificate.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nsg/classical.hpp"
#include "nsg/errors.hpp"
#include "nsg/json_io.hpp"
#include "nsg/ns_lp.hpp"
#include "nsg/oddcycle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitCertificate = 4;

class Report {
 public:
  explicit Report(bool as_json) : as_json_(as_json) {}

  void field(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
  }

  void print(std::ostream& os) const {
    if (as_json_) {
      nsg::json j;
      for (const auto& [k, v] : fields_) j[k] = v;
      os << j.dump(2) << '\n';
    } else {
      for (const auto& [k, v] : fields_) os << k << ": " << v << '\n';
    }
  }

 private:
  bool as_json_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

class Stopwatch {
 public:
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string echo(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 1; i < argc; ++i) os << (i > 1 ? " " : "") << argv[i];
  return os.str();
}

nsg::Game build_named_game(const std::string& name, int n, int ext) {
  nsg::Game g;
  if (name == "chsh") g = nsg::make_chsh();
  else if (name == "chsh3") g = nsg::make_chsh_triangle();
  else if (name == "oddcycle") {
    if (n < 0) throw nsg::ValidationError("oddcycle requires --n");
    g = nsg::make_odd_cycle(n);
  } else {
    throw nsg::ValidationError("unknown game '" + name +
                               "' (available: chsh, chsh3, oddcycle)");
  }
  if (ext > 0) g = nsg::extend(g, ext);
  return g;
}

int cmd_games(const std::string& action, const std::string& name, int n, int ext,
              const std::string& out, bool as_json, const std::string& cmdline) {
  if (action == "list") {
    std::cout << "chsh       2-player CHSH game (no parameters)\n"
                 "chsh3      3-player CHSH with pairwise clauses AB and AC\n"
                 "oddcycle   2-player odd-cycle coloring game, --n odd >= 3\n"
                 "flags      --extend K  replace a 2-player game by its K-th extension\n";
    return kExitOk;
  }
  const Stopwatch timer;
  const nsg::Game g = build_named_game(name, n, ext);
  nsg::write_json_file(out, nsg::game_to_json(g));
  Report r(as_json);
  r.field("command", cmdline);
  r.field("game", g.name);
  r.field("out", out);
  r.field("wall_ms", std::to_string(timer.ms()));
  r.print(std::cout);
  return kExitOk;
}

int cmd_solve(const std::string& game_path, const std::string& value_kind,
              const std::string& behavior_out, const std::string& dual_out,
              bool as_json, const std::string& cmdline) {
  const nsg::Game g = nsg::game_from_json(nsg::read_json_file(game_path));
  Report r(as_json);
  r.field("command", cmdline);
  r.field("game", g.name);
  const Stopwatch timer;
  if (value_kind == "classical") {
    if (!behavior_out.empty() || !dual_out.empty())
      throw nsg::ValidationError("--behavior/--dual apply to --value ns only");
    const nsg::ClassicalResult res = nsg::classical_value(g);
    r.field("kind", "classical");
    r.field("value", res.value.str());
  } else {
    const nsg::NsResult res = nsg::ns_value(g);
    r.field("kind", "no-signaling");
    r.field("value", res.value.str());
    if (!behavior_out.empty()) {
      nsg::write_json_file(behavior_out, nsg::behavior_to_json(res.behavior));
      r.field("behavior", behavior_out);
    }
    if (!dual_out.empty()) {
      nsg::json j;
      for (const auto& [label, y] : res.dual)
        if (!y.is_zero()) j[label] = y.str();
      nsg::write_json_file(dual_out, j);
      r.field("dual", dual_out);
    }
  }
  r.field("wall_ms", std::to_string(timer.ms()));
  r.print(std::cout);
  return kExitOk;
}

int cmd_oddcycle(int n, const std::string& mode, const std::string& cert_out,
                 const std::string& cert_in, bool as_json,
                 const std::string& cmdline) {
  Report r(as_json);
  r.field("command", cmdline);
  r.field("n", std::to_string(n));
  r.field("mode", mode);
  const Stopwatch timer;
  if (mode == "reduced") {
    r.field("kind", "no-signaling");
    r.field("value", nsg::reduced_ns_value(n).str());
  } else if (mode == "full") {
    const nsg::Game g = nsg::extend(nsg::make_odd_cycle(n), 1);
    r.field("kind", "no-signaling");
    r.field("game", g.name);
    r.field("value", nsg::ns_value(g).value.str());
  } else {  // certificate
    nsg::DualCertificate cert;
    if (!cert_in.empty()) {
      cert = nsg::certificate_from_json(nsg::read_json_file(cert_in));
      if (cert.n != n)
        throw nsg::ValidationError("certificate file is for n=" +
                                   std::to_string(cert.n) + ", not n=" +
                                   std::to_string(n));
      r.field("cert_in", cert_in);
    } else {
      cert = nsg::closed_form_certificate(n);
    }
    if (!cert_out.empty()) {
      nsg::write_json_file(cert_out, nsg::certificate_to_json(cert));
      r.field("cert_out", cert_out);
    }
    const nsg::CertCheck check = nsg::verify_certificate(cert);
    r.field("kind", "certificate-bound");
    if (!check.valid) {
      r.field("verification", "FAIL");
      r.field("violation", check.violation);
      r.field("wall_ms", std::to_string(timer.ms()));
      r.print(std::cout);
      return kExitCertificate;
    }
    r.field("bound", check.bound.str());
    r.field("verification", "PASS");
    r.field("warnings", std::to_string(check.warnings.size()));
    for (const std::string& w : check.warnings) std::cerr << "warning: " << w << '\n';
  }
  r.field("wall_ms", std::to_string(timer.ms()));
  r.print(std::cout);
  return kExitOk;
}

std::pair<nsg::Rational, nsg::Rational> parse_weight_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw nsg::ParseError("weight pair must look like 'a/b,c/d': " + s);
  return {nsg::Rational::parse(s.substr(0, comma)),
          nsg::Rational::parse(s.substr(comma + 1))};
}

int cmd_frontier(const std::vector<std::string>& weight_args,
                 const std::string& out, bool as_json) {
  std::vector<std::pair<nsg::Rational, nsg::Rational>> weights;
  if (weight_args.empty()) {
    // fixed rational directions; support values at these pin the polygon
    for (const char* w : {"1,0", "2,1", "1,1", "1,2", "0,1", "1,-1"})
      weights.push_back(parse_weight_pair(w));
  } else {
    for (const std::string& w : weight_args) weights.push_back(parse_weight_pair(w));
  }
  std::ostringstream csv;
  csv << "alpha,beta,value\n";
  nsg::json points = nsg::json::array();
  for (const auto& [alpha, beta] : weights) {
    const nsg::FrontierPoint fp = nsg::chsh_tradeoff_max(alpha, beta);
    csv << alpha.str() << ',' << beta.str() << ',' << fp.optimum.str() << '\n';
    points.push_back({{"alpha", alpha.str()},
                      {"beta", beta.str()},
                      {"value", fp.optimum.str()}});
  }
  if (as_json) {
    std::cout << nsg::json{{"points", points}}.dump(2) << '\n';
  } else {
    std::cout << csv.str();
  }
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw nsg::ParseError("cannot open " + out + " for writing");
    f << csv.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact values of nonlocal games via rational linear programming"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as JSON");

  auto* games = app.add_subcommand("games", "list or emit built-in games");
  std::string games_action, games_name, games_out;
  int games_n = -1, games_ext = 0;
  games->add_option("action", games_action)->required()->check(CLI::IsMember({"list", "emit"}));
  games->add_option("name", games_name, "chsh | chsh3 | oddcycle");
  games->add_option("--n", games_n, "cycle length for oddcycle (odd, >= 3)");
  games->add_option("--extend", games_ext, "emit the K-th extension")->check(CLI::NonNegativeNumber);
  games->add_option("--out", games_out, "output game JSON path");

  auto* solve = app.add_subcommand("solve", "compute a game value from a game file");
  std::string solve_game, solve_kind, solve_behavior, solve_dual;
  solve->add_option("game", solve_game, "game JSON file")->required();
  solve->add_option("--value", solve_kind)->required()->check(CLI::IsMember({"classical", "ns"}));
  solve->add_option("--behavior", solve_behavior, "write the optimal behavior JSON here");
  solve->add_option("--dual", solve_dual, "write the raw dual multipliers here");

  auto* oc = app.add_subcommand("oddcycle", "odd-cycle extension analyses");
  int oc_n = 0;
  std::string oc_mode, oc_cert_out, oc_cert_in;
  oc->add_option("--n", oc_n, "cycle length (odd, >= 3)")->required();
  oc->add_option("--mode", oc_mode)->required()->check(CLI::IsMember({"reduced", "full", "certificate"}));
  oc->add_option("--cert-out", oc_cert_out, "write the certificate JSON here");
  oc->add_option("--cert-in", oc_cert_in, "verify this external certificate instead");

  auto* frontier = app.add_subcommand("frontier", "CHSH tradeoff support values");
  std::vector<std::string> frontier_weights;
  std::string frontier_out;
  frontier->add_option("--weights", frontier_weights, "weight pairs 'a/b,c/d'");
  frontier->add_option("--out", frontier_out, "write the CSV table here");

  // let --json appear after the subcommand too
  for (auto* sub : {games, solve, oc, frontier}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const std::string cmdline = echo(argc, argv);
  try {
    if (games->parsed()) {
      if (games_action == "emit" && (games_name.empty() || games_out.empty()))
        throw nsg::ValidationError("games emit requires a name and --out");
      return cmd_games(games_action, games_name, games_n, games_ext, games_out,
                       as_json, cmdline);
    }
    if (solve->parsed())
      return cmd_solve(solve_game, solve_kind, solve_behavior, solve_dual,
                       as_json, cmdline);
    if (oc->parsed())
      return cmd_oddcycle(oc_n, oc_mode, oc_cert_out, oc_cert_in, as_json, cmdline);
    if (frontier->parsed())
      return cmd_frontier(frontier_weights, frontier_out, as_json);
  } catch (const nsg::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const nsg::CertificateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
