#include "lqnash/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lqnash/resultant.hpp"
#include "lqnash/sturm.hpp"

namespace lqnash {

double h_eval(const NormalizedGame& norm, double x) {
  const double k2 = best_response(norm, Player::Two, x).k_best;
  return best_response(norm, Player::One, k2).k_best - x;
}

BrIterationResult br_iteration(const NormalizedGame& norm, double k_start, int max_iter, double tol) {
  BrIterationResult out;
  double x = k_start;
  for (int it = 1; it <= max_iter; ++it) {
    const double k2 = best_response(norm, Player::Two, x).k_best;
    const double next = best_response(norm, Player::One, k2).k_best;
    out.iterations = it;
    out.last_step = std::abs(next - x);
    x = next;
    if (out.last_step < tol) {
      out.converged = true;
      break;
    }
  }
  out.k1 = x;
  out.k2 = best_response(norm, Player::Two, x).k_best;
  return out;
}

namespace {

struct Residual {
  FloatGame g;
  double state_sign = 1.0;

  std::array<double, 2> operator()(double k1, double k2) const {
    return {rho(0, k1, k2), rho(1, k2, k1)};
  }
  double rho(std::size_t i, double ki, double kj) const {
    const double d = g.a - kj;
    return d * g.r[i] * ki * ki + (g.r[i] + g.q[i] - d * d * g.r[i]) * ki - state_sign * d * g.q[i];
  }
  // d rho_i / d k_i and d rho_i / d k_j.
  std::array<double, 2> grad(std::size_t i, double ki, double kj) const {
    const double d = g.a - kj;
    const double r = g.r[i];
    return {2 * d * r * ki + (r + g.q[i] - d * d * r), -r * ki * ki + 2 * d * r * ki + state_sign * g.q[i]};
  }
};

std::optional<PolicyPair> newton(const Residual& f, double k1, double k2, int max_iter) {
  auto norm_of = [](const std::array<double, 2>& v) { return std::max(std::abs(v[0]), std::abs(v[1])); };
  auto r = f(k1, k2);
  double rn = norm_of(r);
  for (int it = 0; it < max_iter && rn > 0; ++it) {
    const auto g1 = f.grad(0, k1, k2);  // {d/dk1, d/dk2}
    const auto g2 = f.grad(1, k2, k1);  // {d/dk2, d/dk1}
    const double j11 = g1[0], j12 = g1[1];
    const double j21 = g2[1], j22 = g2[0];
    const double det = j11 * j22 - j12 * j21;
    if (det == 0 || !std::isfinite(det)) return std::nullopt;
    const double s1 = (r[0] * j22 - r[1] * j12) / det;
    const double s2 = (j11 * r[1] - j21 * r[0]) / det;
    double lambda = 1.0;
    double n1 = k1, n2 = k2;
    std::array<double, 2> nr{};
    double nrn = 0;
    for (int halving = 0; halving < 40; ++halving) {
      n1 = k1 - lambda * s1;
      n2 = k2 - lambda * s2;
      nr = f(n1, n2);
      nrn = norm_of(nr);
      if (nrn <= rn) break;
      lambda *= 0.5;
    }
    const double step = std::max(std::abs(k1 - n1), std::abs(k2 - n2));
    if (nrn > rn) break;
    k1 = n1;
    k2 = n2;
    r = nr;
    rn = nrn;
    if (step <= 1e-15 * (1.0 + std::abs(k1) + std::abs(k2))) break;
  }
  if (!std::isfinite(k1) || !std::isfinite(k2)) return std::nullopt;
  return PolicyPair{k1, k2};
}

std::vector<PolicyPair> merge_candidates(std::vector<PolicyPair> found, double tol) {
  std::sort(found.begin(), found.end(), [](const PolicyPair& x, const PolicyPair& y) {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  });
  std::vector<PolicyPair> out;
  for (const auto& p : found) {
    bool dup = false;
    for (const auto& q : out)
      if (std::abs(p.first - q.first) <= tol && std::abs(p.second - q.second) <= tol) dup = true;
    if (!dup) out.push_back(p);
  }
  return out;
}

// Shared by the parallel and serial scans; `parallel` only toggles the
// OpenMP pragmas, every cell is computed identically.
std::vector<PolicyPair> scan(const NormalizedGame& norm, int n, const GridScanOptions& options, bool parallel) {
  if (n < 16) throw std::invalid_argument("grid_scan needs n >= 16");
  const Residual f{norm.numeric, options.fault_negate_state_cost ? -1.0 : 1.0};
  const double a = norm.numeric.a;
  const int nodes = n + 1;
  const double h = a / n;

  std::vector<double> rho1(static_cast<std::size_t>(nodes) * nodes);
  std::vector<double> rho2(rho1.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < nodes; ++i) {
    const double k1 = i * h;
    for (int j = 0; j < nodes; ++j) {
      const auto r = f(k1, j * h);
      const std::size_t idx = static_cast<std::size_t>(i) * nodes + j;
      rho1[idx] = r[0];
      rho2[idx] = r[1];
    }
  }

  auto changes_sign = [&](const std::vector<double>& v, int i, int j) {
    const std::size_t base = static_cast<std::size_t>(i) * nodes + j;
    const double c[4] = {v[base], v[base + 1], v[base + nodes], v[base + nodes + 1]};
    const double lo = std::min({c[0], c[1], c[2], c[3]});
    const double hi = std::max({c[0], c[1], c[2], c[3]});
    return lo <= 0 && hi >= 0;
  };

  // One slot per cell row keeps the merge order independent of scheduling.
  std::vector<std::vector<PolicyPair>> per_row(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (int i = 0; i < n; ++i) {
    auto& out = per_row[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      if (!changes_sign(rho1, i, j) || !changes_sign(rho2, i, j)) continue;
      auto p = newton(f, (i + 0.5) * h, (j + 0.5) * h, options.newton_max_iter);
      if (!p) continue;
      const auto [k1, k2] = *p;
      if (!(k1 > 0 && k1 < a && k2 > 0 && k2 < a)) continue;
      if (!(std::abs(closed_loop(a, k1, k2)) < 1)) continue;
      const auto r = f(k1, k2);
      if (std::max(std::abs(r[0]), std::abs(r[1])) > options.accept_residual) continue;
      out.push_back(*p);
    }
  }

  std::vector<PolicyPair> all;
  for (auto& row : per_row) all.insert(all.end(), row.begin(), row.end());
  return merge_candidates(std::move(all), options.dedupe_tol);
}

}  // namespace

std::vector<PolicyPair> grid_scan(const NormalizedGame& norm, int n, const GridScanOptions& options) {
  return scan(norm, n, options, true);
}

std::vector<PolicyPair> grid_scan_serial(const NormalizedGame& norm, int n, const GridScanOptions& options) {
  return scan(norm, n, options, false);
}

UniPoly resultant_elimination(const NormalizedGame& norm) {
  const auto [p1, p2] = stationarity_polynomials(norm);
  UniPoly res = resultant_over_polynomials(coefficients_in_k1(p1), coefficients_in_k1(p2));
  if (res.is_zero()) throw std::runtime_error("resultant vanishes identically: p1 and p2 share a component");
  return res;
}

bool contains_roots_in_range(const UniPoly& res, const UniPoly& g, const BigRational& a) {
  const Bound lo = Bound::at(BigRational(0));
  const Bound hi = Bound::at(a);
  const UniPoly common = gcd(res, g);
  const int in_g = sturm_count(g, lo, hi);
  const int in_common = common.degree() >= 1 ? sturm_count(common, lo, hi) : 0;
  return in_g == in_common;
}

std::vector<TrajectorySample> simulate_cost(const NormalizedGame& norm, double k1, double k2, int horizon,
                                            double x0) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  const auto& g = norm.numeric;
  const double a_cl = closed_loop(g.a, k1, k2);
  std::vector<TrajectorySample> out;
  out.reserve(static_cast<std::size_t>(horizon));
  double x = x0;
  double c1 = 0, c2 = 0;
  for (int t = 0; t < horizon; ++t) {
    const double u1 = -k1 * x;
    const double u2 = -k2 * x;
    c1 += g.q[0] * x * x + g.r[0] * u1 * u1;
    c2 += g.q[1] * x * x + g.r[1] * u2 * u2;
    out.push_back({t, x, u1, u2, c1, c2});
    x = a_cl * x;
  }
  return out;
}

VerifyReport cross_verify(const GameParams& params, const VerifyOptions& options) {
  VerifyReport rep;
  rep.solve = solve(params);
  const NormalizedGame& game = rep.solve.game;
  const double a = game.numeric.a;
  const auto& eqs = rep.solve.equilibria;

  auto matches_solve = [&](double k1, double k2) {
    for (const auto& e : eqs)
      if (std::abs(e.k1_normalized - k1) <= options.tol && std::abs(e.k2_normalized - k2) <= options.tol) return true;
    return false;
  };
  auto describe = [](const char* what, double k1, double k2) {
    std::ostringstream os;
    os.precision(12);
    os << what << " (" << k1 << ", " << k2 << ")";
    return os.str();
  };

  rep.grid = grid_scan(game, options.grid_n, options.grid);
  rep.grid_agrees = rep.grid.size() == eqs.size();
  for (const auto& [k1, k2] : rep.grid) {
    if (!matches_solve(k1, k2)) {
      rep.grid_agrees = false;
      rep.disagreements.push_back(describe("grid_scan found", k1, k2) + " not in solve output");
    }
  }
  for (const auto& e : eqs) {
    bool seen = false;
    for (const auto& [k1, k2] : rep.grid)
      if (std::abs(e.k1_normalized - k1) <= options.tol && std::abs(e.k2_normalized - k2) <= options.tol) seen = true;
    if (!seen) {
      rep.grid_agrees = false;
      rep.disagreements.push_back(describe("solve equilibrium", e.k1_normalized, e.k2_normalized) +
                                  " missed by grid_scan");
    }
  }

  std::mt19937_64 rng(options.seed.value_or(0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int starts = std::max(1, options.br_starts);
  rep.br_agrees = true;
  for (int i = 0; i < starts; ++i) {
    double start = starts == 1 ? 0.0 : a * i / (starts - 1);
    if (options.seed) start = a * (i + unit(rng)) / starts;
    rep.br_starts.push_back(start);
    auto res = br_iteration(game, start, options.br_max_iter, options.br_tol);
    if (res.converged && !matches_solve(res.k1, res.k2)) {
      rep.br_agrees = false;
      rep.disagreements.push_back(describe("br_iteration fixed point", res.k1, res.k2) + " not in solve output");
    }
    rep.br.push_back(res);
  }

  rep.resultant_agrees = contains_roots_in_range(resultant_elimination(game), rep.solve.g, game.a);
  if (!rep.resultant_agrees) rep.disagreements.push_back("resultant misses a root of g in (0, a)");

  rep.simulation_agrees = true;
  const double x0 = game.numeric.x0;
  for (const auto& e : eqs) {
    const auto traj = simulate_cost(game, e.k1_normalized, e.k2_normalized, options.horizon, x0);
    const double acl2 = std::pow(closed_loop(a, e.k1_normalized, e.k2_normalized), 2);
    const double tail = std::pow(acl2, options.horizon) / (1 - acl2);
    const auto& last = traj.back();
    const double bound1 = (game.numeric.q[0] + game.numeric.r[0] * e.k1_normalized * e.k1_normalized) * x0 * x0 * tail;
    const double bound2 = (game.numeric.q[1] + game.numeric.r[1] * e.k2_normalized * e.k2_normalized) * x0 * x0 * tail;
    const double err1 = std::abs(last.partial_cost_1 - e.j1);
    const double err2 = std::abs(last.partial_cost_2 - e.j2);
    rep.simulation_error.push_back(std::max(err1, err2));
    const double slack = 1e-9 * std::max({1.0, e.j1, e.j2});
    if (err1 > bound1 + slack || err2 > bound2 + slack) {
      rep.simulation_agrees = false;
      rep.disagreements.push_back(describe("simulated cost disagrees at", e.k1_normalized, e.k2_normalized));
    }
  }
  return rep;
}

}  // namespace lqnash
