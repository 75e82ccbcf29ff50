#include "lqnash/game.hpp"

#include <cmath>
#include <limits>

namespace lqnash {

GameParams GameParams::from_doubles(double a, double q1, double q2, double r1, double r2, double b1, double b2,
                                    double x0) {
  GameParams p;
  p.a = rational_from_double(a);
  p.q1 = rational_from_double(q1);
  p.q2 = rational_from_double(q2);
  p.r1 = rational_from_double(r1);
  p.r2 = rational_from_double(r2);
  p.b1 = rational_from_double(b1);
  p.b2 = rational_from_double(b2);
  p.x0 = rational_from_double(x0);
  return p;
}

void validate(const GameParams& params) {
  if (params.b1 == 0) throw InvalidParameters("b1 must be nonzero");
  if (params.b2 == 0) throw InvalidParameters("b2 must be nonzero");
  if (params.q1 <= 0) throw InvalidParameters("q1 must be > 0");
  if (params.q2 <= 0) throw InvalidParameters("q2 must be > 0");
  if (params.r1 <= 0) throw InvalidParameters("r1 must be > 0");
  if (params.r2 <= 0) throw InvalidParameters("r2 must be > 0");
}

namespace {

FloatGame numeric_view(const NormalizedGame& g) {
  FloatGame f;
  f.a = to_double(g.a);
  f.q = {to_double(g.q1), to_double(g.q2)};
  f.r = {to_double(g.r1), to_double(g.r2)};
  f.x0 = to_double(g.x0);
  return f;
}

}  // namespace

NormalizedGame normalize(const GameParams& params) {
  validate(params);
  if (params.a == 0) throw TrivialGame();
  NormalizedGame g;
  g.sign_flipped = params.a < 0;
  g.a = abs(params.a);
  g.q1 = params.q1;
  g.q2 = params.q2;
  g.r1 = params.r1 / (params.b1 * params.b1);
  g.r2 = params.r2 / (params.b2 * params.b2);
  g.x0 = params.x0;
  g.b_scale = {params.b1, params.b2};
  g.numeric = numeric_view(g);
  return g;
}

NormalizedGame canonical_game(const BigRational& a, const BigRational& q1, const BigRational& q2,
                              const BigRational& r1, const BigRational& r2) {
  GameParams p;
  p.a = a;
  p.q1 = q1;
  p.q2 = q2;
  p.r1 = r1;
  p.r2 = r2;
  return normalize(p);
}

std::pair<double, double> denormalize_equilibrium(const NormalizedGame& norm, std::pair<double, double> pair) {
  const double s = norm.sign_flipped ? -1.0 : 1.0;
  return {s * pair.first / to_double(norm.b_scale[0]), s * pair.second / to_double(norm.b_scale[1])};
}

double closed_loop(double a, double k1, double k2) { return a - k1 - k2; }

CostReport cost(const NormalizedGame& norm, double k1, double k2) {
  const auto& g = norm.numeric;
  CostReport out;
  out.a_cl = closed_loop(g.a, k1, k2);
  if (std::abs(out.a_cl) >= 1.0) {
    out.j1 = out.j2 = std::numeric_limits<double>::infinity();
    return out;
  }
  const double denom = 1.0 - out.a_cl * out.a_cl;
  const double x0sq = g.x0 * g.x0;
  out.j1 = (g.q[0] + g.r[0] * k1 * k1) / denom * x0sq;
  out.j2 = (g.q[1] + g.r[1] * k2 * k2) / denom * x0sq;
  out.finite = true;
  return out;
}

BestResponseEval best_response(const FloatGame& game, Player player, double k_other) {
  const double q = game.q[index(player)];
  const double r = game.r[index(player)];
  const double d = game.a - k_other;
  const double u = (d * d - 1.0) * r + q;
  const double s = u * u + 4.0 * q * r;
  const double root = std::sqrt(s);
  // u + sqrt(s), without cancellation when u < 0.
  const double n = u >= 0 ? u + root : 4.0 * q * r / (root - u);

  BestResponseEval out;
  out.k_other = k_other;
  out.s_value = s;
  out.p_value = 0.5 * n;
  out.k_best = d * n / (n + 2.0 * r);
  return out;
}

BestResponseEval best_response(const NormalizedGame& norm, Player player, double k_other) {
  return best_response(norm.numeric, player, k_other);
}

std::pair<double, double> residuals(const NormalizedGame& norm, double k1, double k2) {
  const auto& g = norm.numeric;
  auto rho = [&](std::size_t i, double ki, double kj) {
    const double d = g.a - kj;
    return d * g.r[i] * ki * ki + (g.r[i] + g.q[i] - d * d * g.r[i]) * ki - d * g.q[i];
  };
  return {rho(0, k1, k2), rho(1, k2, k1)};
}

std::pair<BigRational, BigRational> residuals(const NormalizedGame& norm, const BigRational& k1,
                                              const BigRational& k2) {
  auto rho = [&](const BigRational& q, const BigRational& r, const BigRational& ki, const BigRational& kj) {
    const BigRational d = norm.a - kj;
    return BigRational(d * r * ki * ki + (r + q - d * d * r) * ki - d * q);
  };
  return {rho(norm.q1, norm.r1, k1, k2), rho(norm.q2, norm.r2, k2, k1)};
}

std::pair<MultiPoly, MultiPoly> stationarity_polynomials(const NormalizedGame& norm) {
  auto build = [&](const BigRational& q, const BigRational& r, const MultiPoly& ki, const MultiPoly& kj) {
    const MultiPoly d = MultiPoly::constant(norm.a) - kj;
    return d * ki * ki * r + (MultiPoly::constant(r + q) - d * d * r) * ki - d * q;
  };
  const MultiPoly k1 = MultiPoly::k1();
  const MultiPoly k2 = MultiPoly::k2();
  return {build(norm.q1, norm.r1, k1, k2), build(norm.q2, norm.r2, k2, k1)};
}

}  // namespace lqnash
