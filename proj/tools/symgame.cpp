// Command line front end: check games for symmetry, report subspace
// dimensions, export bases and testing systems, project games onto the
// symmetric subspace, and generate reproducible symmetric fixtures.
//
// Exit codes for judging commands: 0 symmetric, 1 not symmetric, 2 error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symgame/config.hpp"
#include "symgame/error.hpp"
#include "symgame/exact_linalg.hpp"
#include "symgame/game.hpp"
#include "symgame/oracle.hpp"
#include "symgame/sym_basis.hpp"
#include "symgame/sym_check.hpp"

namespace {

using nlohmann::json;
using namespace symgame;

constexpr int kExitSymmetric = 0;
constexpr int kExitAsymmetric = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed for " + path);
}

json report_to_json(const CheckReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"equation", v.equation},
                          {"lhs_index", v.lhs_index},
                          {"rhs_index", v.rhs_index},
                          {"difference", v.difference}});
  }
  return json{{"symmetric", report.symmetric},
              {"method", to_string(report.method)},
              {"max_residual", report.max_residual},
              {"violations", violations}};
}

void print_report_human(const CheckReport& report) {
  std::cout << "method: " << to_string(report.method) << "\n"
            << "verdict: " << (report.symmetric ? "symmetric" : "not symmetric") << "\n"
            << "max residual: " << report.max_residual << "\n";
  if (!report.violations.empty()) {
    std::cout << "violations: " << report.violations.size() << " (showing up to 10)\n";
    std::size_t shown = 0;
    for (const Violation& v : report.violations) {
      if (shown++ == 10) break;
      std::cout << "  " << v.equation << "  vec[" << v.lhs_index << "] - vec[" << v.rhs_index
                << "] = " << v.difference << "\n";
    }
  }
}

// Parametric payoff pattern: one symbol per basis column, printed as the
// n x k^n grid the basis spans. Kept to small boards.
void print_pattern(const SymSubspaceBasis& basis) {
  const std::size_t kn = basis.rows() / static_cast<std::size_t>(basis.players());
  for (int i = 1; i <= basis.players(); ++i) {
    std::cout << "V" << i << ":";
    for (std::size_t j = 0; j < kn; ++j) {
      std::cout << " c"
                << basis.column_of_row(static_cast<std::size_t>(i - 1) * kn + j) + 1;
    }
    std::cout << "\n";
  }
}

json basis_header(const SymSubspaceBasis& basis) {
  json columns = json::array();
  for (std::size_t c = 0; c < basis.columns(); ++c) {
    const BasisColumn label = basis.column_label(c);
    columns.push_back({{"column", c + 1},
                       {"class", basis.classes()[label.class_index].representative},
                       {"strategy", label.strategy}});
  }
  return json{{"players", basis.players()},
              {"strategies", basis.strategies()},
              {"rows", basis.rows()},
              {"cols", basis.columns()},
              {"columns", columns}};
}

int run(int argc, char** argv) {
  if (const char* cap = std::getenv("SYMGAME_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || value == 0) {
      throw Error("SYMGAME_SIZE_CAP must be a positive integer");
    }
    set_size_cap(static_cast<std::size_t>(value));
  }

  CLI::App app{"symmetric game toolkit: decide symmetry of finite games, build the\n"
               "symmetric-subspace basis, and export the associated linear systems"};
  app.require_subcommand(1);

  std::string game_path;
  std::string out_path;
  std::string method = "both";
  std::string format = "human";
  std::string kind = "minimal";
  double tol = kDefaultTolerance;
  int players = 0;
  int strategies = 0;
  std::uint64_t seed = 0;
  double lo = -10.0;
  double hi = 10.0;

  auto* check = app.add_subcommand("check", "decide whether a game document is symmetric");
  check->add_option("file", game_path, "game document (JSON)")->required();
  check->add_option("--method", method, "prop1 | minimal | both")->default_str("both");
  check->add_option("--tol", tol, "absolute tolerance on payoff residuals");
  check->add_option("--format", format, "human | json")->default_str("human");

  auto* oracle_check =
      app.add_subcommand("oracle-check", "brute-force symmetry check over all permutations");
  oracle_check->add_option("file", game_path, "game document (JSON)")->required();
  oracle_check->add_option("--tol", tol, "absolute tolerance on payoff residuals");
  oracle_check->add_option("--format", format, "human | json")->default_str("human");

  auto* dim = app.add_subcommand("dim", "dimension of the symmetric-game subspace");
  dim->add_option("players", players, "player count")->required();
  dim->add_option("strategies", strategies, "strategy count")->required();
  dim->add_option("--format", format, "human | json")->default_str("human");

  auto* basis = app.add_subcommand("basis", "export the symmetric-subspace basis");
  basis->add_option("players", players, "player count")->required();
  basis->add_option("strategies", strategies, "strategy count")->required();
  basis->add_option("--out", out_path, "triplet file path; header goes to PATH.json")
      ->required();
  basis->add_option("--format", format, "human | json")->default_str("human");

  auto* system = app.add_subcommand("system", "export a symmetry testing system");
  system->add_option("players", players, "player count")->required();
  system->add_option("strategies", strategies, "strategy count")->required();
  system->add_option("--out", out_path, "triplet file path; header goes to PATH.json")
      ->required();
  system->add_option("--kind", kind, "minimal | full")->default_str("minimal");
  system->add_option("--format", format, "human | json")->default_str("human");

  auto* project = app.add_subcommand("project", "nearest symmetric game to a given game");
  project->add_option("file", game_path, "game document (JSON)")->required();
  project->add_option("--out", out_path, "output game document")->required();
  project->add_option("--format", format, "human | json")->default_str("human");

  auto* generate = app.add_subcommand("generate", "write a reproducible random symmetric game");
  generate->add_option("players", players, "player count")->required();
  generate->add_option("strategies", strategies, "strategy count")->required();
  generate->add_option("--seed", seed, "generator seed")->required();
  generate->add_option("--out", out_path, "output game document")->required();
  generate->add_option("--lo", lo, "coefficient range lower bound");
  generate->add_option("--hi", hi, "coefficient range upper bound");
  generate->add_option("--format", format, "human | json")->default_str("human");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  if (format != "human" && format != "json") throw Error("unknown format: " + format);
  const bool json_out = format == "json";
  if (tol <= 0) throw Error("tolerance must be positive");

  if (check->parsed()) {
    if (method != "prop1" && method != "minimal" && method != "both") {
      throw Error("unknown method: " + method);
    }
    const FiniteGame game = load_game(read_file(game_path));
    std::vector<CheckReport> reports;
    if (method == "prop1" || method == "both") reports.push_back(check_transpositions(game, tol));
    if (method == "minimal" || method == "both") reports.push_back(check_minimal(game, tol));
    bool symmetric = true;
    for (const CheckReport& r : reports) symmetric = symmetric && r.symmetric;
    if (json_out) {
      json out = json::array();
      for (const CheckReport& r : reports) out.push_back(report_to_json(r));
      std::cout << json{{"symmetric", symmetric}, {"reports", out}}.dump(2) << "\n";
    } else {
      for (const CheckReport& r : reports) print_report_human(r);
    }
    return symmetric ? kExitSymmetric : kExitAsymmetric;
  }

  if (oracle_check->parsed()) {
    const FiniteGame game = load_game(read_file(game_path));
    const auto witness = find_symmetry_violation(game, tol);
    if (json_out) {
      json out{{"symmetric", !witness.has_value()}};
      if (witness) {
        out["witness"] = {{"sigma", witness->sigma.mapping},
                          {"player", witness->player},
                          {"profile", witness->profile.choices},
                          {"lhs", witness->lhs},
                          {"rhs", witness->rhs}};
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "verdict: " << (witness ? "not symmetric" : "symmetric") << "\n";
      if (witness) {
        std::cout << "witness: sigma=(";
        for (std::size_t i = 0; i < witness->sigma.mapping.size(); ++i) {
          std::cout << (i ? " " : "") << witness->sigma.mapping[i];
        }
        std::cout << ") player=" << witness->player << " profile=(";
        for (std::size_t i = 0; i < witness->profile.choices.size(); ++i) {
          std::cout << (i ? " " : "") << witness->profile.choices[i];
        }
        std::cout << ") payoffs " << witness->lhs << " vs " << witness->rhs << "\n";
      }
    }
    return witness ? kExitAsymmetric : kExitSymmetric;
  }

  if (dim->parsed()) {
    const std::uint64_t d = dimension(players, strategies);
    const std::uint64_t classes = d / static_cast<std::uint64_t>(strategies);
    const std::size_t kn = checked_pow(static_cast<std::size_t>(strategies),
                                       static_cast<unsigned>(players));
    const std::size_t knm1 = kn / static_cast<std::size_t>(strategies);
    const std::uint64_t minimal_rows =
        static_cast<std::uint64_t>(players - 1) * kn +
        static_cast<std::uint64_t>(strategies) * (knm1 - classes);
    if (json_out) {
      std::cout << json{{"players", players},
                        {"strategies", strategies},
                        {"dimension", d},
                        {"classes", classes},
                        {"minimal_system_rows", minimal_rows}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "players " << players << ", strategies " << strategies << "\n"
                << "subspace dimension: " << d << "\n"
                << "multiset classes: " << classes << "\n"
                << "minimal system rows: " << minimal_rows << "\n";
    }
    return 0;
  }

  if (basis->parsed()) {
    const SymSubspaceBasis b = symmetric_subspace_basis(players, strategies);
    write_file(out_path, b.sparse().to_triplet_text());
    write_file(out_path + ".json", basis_header(b).dump(2) + "\n");
    if (json_out) {
      std::cout << json{{"rows", b.rows()},
                        {"cols", b.columns()},
                        {"triplets", out_path},
                        {"header", out_path + ".json"}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "basis " << b.rows() << "x" << b.columns() << " written to " << out_path
                << "\n";
      if (b.rows() <= 128) print_pattern(b);
    }
    return 0;
  }

  if (system->parsed()) {
    if (kind != "minimal" && kind != "full") throw Error("unknown system kind: " + kind);
    const SparseMatrix m = kind == "minimal" ? build_minimal_system(players, strategies)
                                             : build_full_system(players, strategies);
    write_file(out_path, m.to_triplet_text());
    write_file(out_path + ".json", json{{"players", players},
                                        {"strategies", strategies},
                                        {"kind", kind},
                                        {"rows", m.rows()},
                                        {"cols", m.cols()}}
                                           .dump(2) +
                                       "\n");
    if (json_out) {
      std::cout << json{{"rows", m.rows()}, {"cols", m.cols()}, {"triplets", out_path}}.dump(2)
                << "\n";
    } else {
      std::cout << kind << " system " << m.rows() << "x" << m.cols() << " written to "
                << out_path << "\n";
    }
    return 0;
  }

  if (project->parsed()) {
    const FiniteGame game = load_game(read_file(game_path));
    const Projection p = project_symmetric(game);
    write_file(out_path, save_game(p.game));
    if (json_out) {
      std::cout << json{{"distance", p.distance}, {"output", out_path}}.dump(2) << "\n";
    } else {
      std::cout << "distance: " << p.distance << "\n"
                << "projected game written to " << out_path << "\n";
    }
    return 0;
  }

  if (generate->parsed()) {
    const FiniteGame game = random_symmetric_game(players, strategies, seed, lo, hi);
    write_file(out_path, save_game(game));
    if (json_out) {
      std::cout << json{{"output", out_path}, {"seed", seed}}.dump(2) << "\n";
    } else {
      std::cout << "symmetric game written to " << out_path << "\n";
    }
    return 0;
  }

  throw Error("no command selected");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const symgame::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
