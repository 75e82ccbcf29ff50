#include "lqnash/report.hpp"

#include <sstream>

#include "lqnash/sweep.hpp"

namespace lqnash {
namespace {

using nlohmann::json;

double r12(double v) { return round_presentation(v); }

json params_json(const GameParams& p) {
  return {{"a", to_string(p.a)},   {"b1", to_string(p.b1)}, {"b2", to_string(p.b2)},
          {"q1", to_string(p.q1)}, {"q2", to_string(p.q2)}, {"r1", to_string(p.r1)},
          {"r2", to_string(p.r2)}, {"x0", to_string(p.x0)}};
}

json flags_json(const TheoremFlags& f) {
  return {{"existence", f.existence},
          {"at_most_three", f.at_most_three},
          {"delta_consistent", f.delta_consistent},
          {"outer_roots", f.outer_roots}};
}

}  // namespace

json solve_report_json(const SolveReport& rep) {
  if (!rep.flags.all()) throw ConsistencyError("refusing to serialize a report with failed theorem flags");
  json g_coeffs = json::array();
  for (int i = 0; i <= rep.g.degree(); ++i) g_coeffs.push_back(to_string(rep.g.coeff(i) / kGScale));

  json eqs = json::array();
  for (const auto& e : rep.equilibria)
    eqs.push_back({{"k1", r12(e.k1)},
                   {"k2", r12(e.k2)},
                   {"a_cl", r12(e.a_cl)},
                   {"j1", r12(e.j1)},
                   {"j2", r12(e.j2)},
                   {"residual", r12(e.residual_norm)},
                   {"root_multiplicity", e.root_multiplicity}});

  const NormalizedGame& n = rep.game;
  return {{"trivial", false},
          {"params", params_json(rep.params)},
          {"normalized",
           {{"a", to_string(n.a)},
            {"q1", to_string(n.q1)},
            {"q2", to_string(n.q2)},
            {"r1", to_string(n.r1)},
            {"r2", to_string(n.r2)},
            {"sign_flipped", n.sign_flipped}}},
          {"g", {{"coefficients", g_coeffs}, {"text", to_string(rep.g * BigRational(1, kGScale), "k2")}}},
          {"delta", r12(to_double(rep.delta))},
          {"delta_exact", to_string(rep.delta)},
          {"delta_sign", rep.delta_sign},
          {"real_roots_g",
           {{"total", rep.real_roots_total},
            {"below_zero", rep.roots_below_zero},
            {"in_range", rep.roots_in_range},
            {"above_a", rep.roots_above_a}}},
          {"n_nash", rep.equilibria.size()},
          {"equilibria", eqs},
          {"theorem_flags", flags_json(rep.flags)}};
}

json trivial_game_json(const GameParams& p) {
  const double x0 = to_double(p.x0);
  return {{"trivial", true},
          {"params", params_json(p)},
          {"n_nash", 1},
          {"equilibria",
           json::array({{{"k1", 0.0},
                         {"k2", 0.0},
                         {"a_cl", 0.0},
                         {"j1", r12(to_double(p.q1) * x0 * x0)},
                         {"j2", r12(to_double(p.q2) * x0 * x0)}}})}};
}

std::string solve_report_table(const SolveReport& rep) {
  std::ostringstream os;
  os << "g(k2)      = " << to_string(rep.g * BigRational(1, kGScale), "k2") << "\n";
  os << "delta      = " << format_number(to_double(rep.delta)) << " (sign " << rep.delta_sign << ")\n";
  os << "real roots = " << rep.real_roots_total << " (below 0: " << rep.roots_below_zero
     << ", in (0,a): " << rep.roots_in_range << ", above a: " << rep.roots_above_a << ")\n";
  os << "equilibria = " << rep.equilibria.size() << "\n";
  os << "  #  k1              k2              a_cl            J1              J2\n";
  int i = 1;
  for (const auto& e : rep.equilibria) {
    char line[256];
    std::snprintf(line, sizeof(line), "  %d  %-15.12g %-15.12g %-15.12g %-15.12g %.12g\n", i++, e.k1, e.k2, e.a_cl,
                  e.j1, e.j2);
    os << line;
  }
  return os.str();
}

std::string trivial_game_table(const GameParams& p) {
  std::ostringstream os;
  os << "a = 0: unique equilibrium (k1, k2) = (0, 0)\n";
  os << "J1 = " << format_number(to_double(p.q1 * p.x0 * p.x0)) << ", J2 = "
     << format_number(to_double(p.q2 * p.x0 * p.x0)) << "\n";
  return os.str();
}

std::string verify_report_text(const VerifyReport& rep) {
  std::ostringstream os;
  os << "solve: " << rep.solve.equilibria.size() << " equilibria\n";
  for (const auto& e : rep.solve.equilibria)
    os << "  (" << format_number(e.k1_normalized) << ", " << format_number(e.k2_normalized) << ")\n";
  auto mark = [](bool ok) { return ok ? "agree" : "DISAGREE"; };
  os << "oracle        result\n";
  os << "grid_scan     " << mark(rep.grid_agrees) << " (" << rep.grid.size() << " pairs)\n";
  std::size_t conv = 0;
  for (const auto& b : rep.br) conv += b.converged ? 1 : 0;
  os << "br_iteration  " << mark(rep.br_agrees) << " (" << conv << "/" << rep.br.size() << " starts converged)\n";
  os << "resultant     " << mark(rep.resultant_agrees) << "\n";
  os << "simulation    " << mark(rep.simulation_agrees) << "\n";
  for (const auto& d : rep.disagreements) os << "disagreement: " << d << "\n";
  os << (rep.all_agree() ? "ALL AGREE" : "ORACLE DISAGREEMENT") << "\n";
  return os.str();
}

}  // namespace lqnash
