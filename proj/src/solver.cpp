#include "lqnash/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lqnash/resultant.hpp"

namespace lqnash {

UniPoly build_g(const NormalizedGame& norm) {
  auto c = elimination_coefficients<BigRational>(norm.a, norm.q1, norm.q2, norm.r1, norm.r2);
  return UniPoly(std::vector<BigRational>(c.begin(), c.end()));
}

DiscriminantClass classify_discriminant(const UniPoly& g) {
  if (g.degree() != 5) {
    std::ostringstream os;
    os << "elimination polynomial has degree " << g.degree() << ", expected 5";
    throw DegenerateDegree(os.str());
  }
  DiscriminantClass out;
  out.delta = discriminant(g);
  out.sign = sign(out.delta);
  return out;
}

std::vector<CandidateRoot> find_candidate_roots(const UniPoly& g, const BigRational& a, const BigRational& width) {
  std::vector<CandidateRoot> out;
  // g(a) != 0 for valid games, so the roots in (0, a] are those in (0, a).
  for (const auto& iv : isolate_real_roots(g, BigRational(0), a)) {
    if (iv.hi == a && g(a) == 0) continue;
    CandidateRoot c;
    c.interval = iv;
    c.multiplicity = iv.multiplicity;
    c.value = refine_root(g, iv, width);
    c.approx = to_double(c.value);
    out.push_back(std::move(c));
  }
  return out;
}

double recover_k1(const NormalizedGame& norm, double k2) { return best_response(norm, Player::One, k2).k_best; }

namespace {

double max_abs_residual(const NormalizedGame& game, double k1, double k2) {
  auto [rho1, rho2] = residuals(game, rational_from_double(k1), rational_from_double(k2));
  return std::max(std::abs(to_double(rho1)), std::abs(to_double(rho2)));
}

[[noreturn]] void fail(const std::string& what) { throw ConsistencyError(what); }

}  // namespace

SolveReport solve_normalized(const NormalizedGame& game, const SolveOptions& options) {
  SolveReport report;
  report.game = game;
  report.params.a = game.a;
  report.params.q1 = game.q1;
  report.params.q2 = game.q2;
  report.params.r1 = game.r1;
  report.params.r2 = game.r2;
  report.params.x0 = game.x0;
  report.g = build_g(game);

  const DiscriminantClass cls = classify_discriminant(report.g);
  // disc(c p) = c^(2n-2) disc(p); n = 5 and c = 2.
  report.delta = cls.delta / BigRational(256);
  report.delta_sign = cls.sign;

  const SturmChain chain = sturm_chain(report.g);
  const BigRational zero(0);
  report.real_roots_total = sturm_count(chain, Bound::neg_inf(), Bound::pos_inf());
  report.roots_below_zero = sturm_count(chain, Bound::neg_inf(), Bound::at(zero));
  report.roots_in_range = sturm_count(chain, Bound::at(zero), Bound::at(game.a));
  report.roots_above_a = sturm_count(chain, Bound::at(game.a), Bound::pos_inf());

  const double a = game.numeric.a;
  for (const auto& root : find_candidate_roots(report.g, game.a, options.refine_width)) {
    const double k2 = root.approx;
    const double k1 = recover_k1(game, k2);
    NashEquilibrium eq;
    eq.k1_normalized = k1;
    eq.k2_normalized = k2;
    eq.root_multiplicity = root.multiplicity;
    eq.residual_norm = max_abs_residual(game, k1, k2);

    const CostReport c = cost(game, k1, k2);
    std::ostringstream where;
    where.precision(17);
    where << "candidate (" << k1 << ", " << k2 << ")";
    if (!(eq.residual_norm <= options.tol_verify))
      fail(where.str() + " has residual " + std::to_string(eq.residual_norm));
    if (!c.finite) fail(where.str() + " is not stabilizing");
    if (!(0 < k1 && k1 < a - k2 && a - k2 < a && 0 < k2 && k2 < a - k1 && a - k1 < a))
      fail(where.str() + " violates 0 < k_i < a - k_j < a");

    auto [raw1, raw2] = denormalize_equilibrium(game, {k1, k2});
    eq.k1 = raw1;
    eq.k2 = raw2;
    eq.a_cl = game.sign_flipped ? -c.a_cl : c.a_cl;
    eq.j1 = c.j1;
    eq.j2 = c.j2;
    report.equilibria.push_back(eq);
  }

  const auto n = report.equilibria.size();
  auto& f = report.flags;
  f.existence = n >= 1;
  f.at_most_three = n <= 3;
  f.delta_consistent = (report.delta_sign >= 0 || (n == 1 && report.real_roots_total == 3)) &&
                       (report.delta_sign != 0 || n <= 2);
  f.outer_roots = report.g(zero) > 0 && report.g(game.a) < 0 && report.roots_below_zero >= 1 &&
                  report.roots_above_a >= 1;
  if (static_cast<int>(n) != report.roots_in_range) fail("root count in (0, a) differs from equilibria found");
  if (!f.all()) {
    std::ostringstream os;
    os << "theorem flags violated: existence=" << f.existence << " at_most_three=" << f.at_most_three
       << " delta_consistent=" << f.delta_consistent << " outer_roots=" << f.outer_roots;
    fail(os.str());
  }
  return report;
}

SolveReport solve(const GameParams& params, const SolveOptions& options) {
  NormalizedGame game = normalize(params);
  SolveReport report = solve_normalized(game, options);
  report.params = params;
  return report;
}

int count_equilibria(const NormalizedGame& game) {
  return sturm_count(build_g(game), Bound::at(BigRational(0)), Bound::at(game.a));
}

}  // namespace lqnash
