#include "lqnash/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lqnash/groebner.hpp"
#include "lqnash/oracle.hpp"
#include "lqnash/report.hpp"
#include "lqnash/solver.hpp"
#include "lqnash/sweep.hpp"

namespace lqnash {

GroebnerCheck groebner_check(const GameParams& params) {
  const NormalizedGame norm = normalize(params);
  const auto [p1, p2] = stationarity_polynomials(norm);
  GroebnerCheck out;
  out.basis = buchberger({p1, p2});
  out.from_basis = elimination_polynomial(out.basis);
  out.from_formula = build_g(norm).monic();
  out.pass = out.from_basis && *out.from_basis == out.from_formula;
  return out;
}

namespace {

struct ParamFlags {
  std::string a, q1, q2, r1, r2;
  std::string b1 = "1", b2 = "1", x0 = "1";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--a", a, "open-loop coefficient")->required();
    cmd->add_option("--q1", q1, "state weight of player 1")->required();
    cmd->add_option("--q2", q2, "state weight of player 2")->required();
    cmd->add_option("--r1", r1, "control weight of player 1")->required();
    cmd->add_option("--r2", r2, "control weight of player 2")->required();
    cmd->add_option("--b1", b1, "input gain of player 1");
    cmd->add_option("--b2", b2, "input gain of player 2");
    cmd->add_option("--x0", x0, "initial state");
  }

  // Exact rationals; decimals are read as the decimal they spell.
  GameParams parse() const {
    auto get = [](const std::string& name, const std::string& text) {
      auto v = parse_rational(text);
      if (!v) throw InvalidParameters(name + " is not a rational number: '" + text + "'");
      return *v;
    };
    GameParams p;
    p.a = get("a", a);
    p.q1 = get("q1", q1);
    p.q2 = get("q2", q2);
    p.r1 = get("r1", r1);
    p.r2 = get("r2", r2);
    p.b1 = get("b1", b1);
    p.b2 = get("b2", b2);
    p.x0 = get("x0", x0);
    return p;
  }
};

int cmd_solve(const ParamFlags& flags, const std::string& format, std::ostream& out) {
  const GameParams p = flags.parse();
  if (p.a == 0) {
    validate(p);
    if (format == "table")
      out << trivial_game_table(p);
    else
      out << trivial_game_json(p).dump(2) << "\n";
    return kExitOk;
  }
  const SolveReport rep = solve(p);
  if (format == "table")
    out << solve_report_table(rep);
  else
    out << solve_report_json(rep).dump(2) << "\n";
  return kExitOk;
}

int cmd_sweep(const std::string& path, bool quiet, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot read config " << path << "\n";
    return kExitInvalid;
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    err << "config is not valid JSON: " << e.what() << "\n";
    return kExitInvalid;
  }
  const SweepConfig config = parse_sweep_config(doc);
  const auto rows = run_sweep(config);
  // Render everything before touching the filesystem.
  const std::string csv = sweep_csv(rows);
  const std::string svg = config.outputs.svg ? sweep_svg(rows) : std::string();
  const std::string json = config.outputs.json ? sweep_json(rows).dump(2) + "\n" : std::string();
  write_file_atomic(config.outputs.csv, csv);
  if (config.outputs.svg) write_file_atomic(*config.outputs.svg, svg);
  if (config.outputs.json) write_file_atomic(*config.outputs.json, json);
  if (!quiet) out << "wrote " << rows.size() << " rows to " << config.outputs.csv << "\n";
  return kExitOk;
}

int cmd_verify(const ParamFlags& flags, const VerifyOptions& options, std::ostream& out) {
  const VerifyReport rep = cross_verify(flags.parse(), options);
  out << verify_report_text(rep);
  return rep.all_agree() ? kExitOk : kExitDisagreement;
}

int cmd_groebner(const ParamFlags& flags, bool quiet, std::ostream& out) {
  const GroebnerCheck check = groebner_check(flags.parse());
  if (!quiet) {
    out << "basis (" << check.basis.size() << " elements):\n";
    for (const auto& b : check.basis) out << "  " << to_string(b) << "\n";
  }
  out << "buchberger: " << (check.from_basis ? to_string(*check.from_basis, "k2") : std::string("<none>")) << "\n";
  out << "formula:    " << to_string(check.from_formula, "k2") << "\n";
  out << (check.pass ? "PASS" : "FAIL") << "\n";
  return check.pass ? kExitOk : kExitDisagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nash equilibria of scalar two-player LQ games"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> seed;
  int threads = 0;
  bool quiet = false;
  app.add_option("--seed", seed, "seed for randomized verify starts");
  app.add_option("--threads", threads, "worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--quiet", quiet, "suppress informational output");

  ParamFlags solve_flags, verify_flags, gb_flags;
  std::string format = "json";
  auto* solve_cmd = app.add_subcommand("solve", "solve one game");
  solve_flags.add_to(solve_cmd);
  solve_cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::string config_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep from a JSON config");
  sweep_cmd->add_option("config", config_path, "config file")->required();

  VerifyOptions vopt;
  bool fault = false;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check solve against brute-force oracles");
  verify_flags.add_to(verify_cmd);
  verify_cmd->add_option("--grid-n", vopt.grid_n, "grid resolution")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", vopt.tol, "agreement tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--fault-negate-state-cost", fault)->group("");

  auto* gb_cmd = app.add_subcommand("groebner-check", "re-derive the quintic with Buchberger");
  gb_flags.add_to(gb_cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (threads > 0) omp_set_num_threads(threads);
  vopt.seed = seed;
  vopt.grid.fault_negate_state_cost = fault;

  try {
    if (*solve_cmd) return cmd_solve(solve_flags, format, out);
    if (*sweep_cmd) return cmd_sweep(config_path, quiet, out, err);
    if (*verify_cmd) return cmd_verify(verify_flags, vopt, out);
    if (*gb_cmd) return cmd_groebner(gb_flags, quiet, out);
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const TrivialGame& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  } catch (const DegenerateDegree& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConsistency;
  }
  return kExitInvalid;
}

}  // namespace lqnash
