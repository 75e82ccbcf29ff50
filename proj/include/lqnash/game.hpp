#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "lqnash/multipoly.hpp"
#include "lqnash/rational.hpp"

namespace lqnash {

// Scalar two-player game x+ = a x + b1 u1 + b2 u2, u_i = -k_i x,
// J_i = sum_t q_i x_t^2 + r_i u_i,t^2. Parameters are exact rationals; see
// GameParams::from_doubles for the floating entry point.
struct GameParams {
  BigRational a;
  BigRational b1{1};
  BigRational b2{1};
  BigRational q1{1};
  BigRational q2{1};
  BigRational r1{1};
  BigRational r2{1};
  BigRational x0{1};

  // Exact binary values of the doubles.
  static GameParams from_doubles(double a, double q1, double q2, double r1, double r2, double b1 = 1.0,
                                 double b2 = 1.0, double x0 = 1.0);
};

enum class Player { One = 0, Two = 1 };

inline Player other(Player p) { return p == Player::One ? Player::Two : Player::One; }
inline std::size_t index(Player p) { return static_cast<std::size_t>(p); }

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// a == 0: the unique equilibrium is (0, 0) and there is nothing to solve.
class TrivialGame : public std::runtime_error {
 public:
  TrivialGame() : std::runtime_error("a = 0: the unique Nash equilibrium is (0, 0)") {}
  std::pair<double, double> equilibrium() const { return {0.0, 0.0}; }
};

// Throws InvalidParameters naming the first violated invariant.
void validate(const GameParams& params);

// Floating copy of the canonical game, for the hot paths.
struct FloatGame {
  double a = 0;
  std::array<double, 2> q{};
  std::array<double, 2> r{};
  double x0 = 1;
};

// Canonical form: a > 0, b folded into the controls (k~ = b k) and the
// control weights (r~ = r / b^2).
struct NormalizedGame {
  BigRational a;
  BigRational q1, q2;
  BigRational r1, r2;
  BigRational x0{1};
  bool sign_flipped = false;
  std::array<BigRational, 2> b_scale{BigRational(1), BigRational(1)};
  FloatGame numeric;

  const BigRational& q(Player p) const { return p == Player::One ? q1 : q2; }
  const BigRational& r(Player p) const { return p == Player::One ? r1 : r2; }
};

// Validates and canonicalizes. Throws TrivialGame for a == 0.
NormalizedGame normalize(const GameParams& params);

// Canonical game from parameters that are already canonical (a > 0, b = 1).
NormalizedGame canonical_game(const BigRational& a, const BigRational& q1, const BigRational& q2,
                              const BigRational& r1, const BigRational& r2);

// k_i = s * k~_i / b_i with s = -1 when the sign of a was flipped.
std::pair<double, double> denormalize_equilibrium(const NormalizedGame& norm, std::pair<double, double> pair);

double closed_loop(double a, double k1, double k2);

struct CostReport {
  double j1 = 0;
  double j2 = 0;
  double a_cl = 0;
  bool finite = false;  // |a_cl| < 1; otherwise j1 = j2 = +inf
};

CostReport cost(const NormalizedGame& norm, double k1, double k2);

struct BestResponseEval {
  double k_other = 0;
  double s_value = 0;  // ((d^2 - 1) r + q)^2 + 4 q r, d = a - k_other
  double p_value = 0;  // positive root of the scalar Riccati equation
  double k_best = 0;
};

BestResponseEval best_response(const NormalizedGame& norm, Player player, double k_other);
BestResponseEval best_response(const FloatGame& game, Player player, double k_other);

// Stationarity residuals
//   rho_i = d r_i k_i^2 + (r_i + q_i - d^2 r_i) k_i - d q_i,  d = a - k_j.
std::pair<double, double> residuals(const NormalizedGame& norm, double k1, double k2);
std::pair<BigRational, BigRational> residuals(const NormalizedGame& norm, const BigRational& k1,
                                              const BigRational& k2);

// The same two residuals as polynomials in (k1, k2).
std::pair<MultiPoly, MultiPoly> stationarity_polynomials(const NormalizedGame& norm);

}  // namespace lqnash
