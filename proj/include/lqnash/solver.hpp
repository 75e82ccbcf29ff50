#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "lqnash/game.hpp"
#include "lqnash/sturm.hpp"
#include "lqnash/unipoly.hpp"

namespace lqnash {

class DegenerateDegree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guarantee of the existence/counting theorem failed. Indicates a bug,
// not bad input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficients (lowest power first) of 2*g, the quintic in k2 that a lex
// Groebner basis of the stationarity system contains. Written over any
// commutative ring T with scalar multiplication by BigRational, so the same
// formula serves concrete games (T = BigRational) and one-parameter families
// (T = UniPoly in a).
template <typename T>
std::array<T, 6> elimination_coefficients(const T& a, const T& q1, const T& q2, const T& r1, const T& r2) {
  const T r11 = r1 * r1;
  const T r22 = r2 * r2;
  const T rr = r11 * r22;
  const T a2 = a * a;
  const T a3 = a2 * a;
  const T a4 = a3 * a;
  const T q2r11r2 = q2 * r11 * r2;
  const T q1r1r22 = q1 * r1 * r22;
  const T q2sq_r11 = q2 * q2 * r11;

  std::array<T, 6> c;
  c[5] = a * rr * BigRational(2);
  c[4] = a2 * rr * BigRational(-5) + q2r11r2 * BigRational(2) - q1r1r22 * BigRational(2) + rr * BigRational(2);
  c[3] = (a3 * rr - a * q2r11r2 + a * q1r1r22 - a * rr) * BigRational(4);
  c[2] = a4 * rr * BigRational(-1) + a2 * q2r11r2 * BigRational(2) - a2 * q1r1r22 * BigRational(2) +
         a2 * rr * BigRational(2) + q2sq_r11 - q1 * q1 * r22 - q1r1r22 * BigRational(2) - rr;
  c[1] = a * q2sq_r11 * BigRational(-2);
  c[0] = a2 * q2sq_r11;
  return c;
}

// 2*g for the canonical game; the factor 2 clears the halves.
UniPoly build_g(const NormalizedGame& norm);
inline constexpr int kGScale = 2;

struct DiscriminantClass {
  BigRational delta;
  int sign = 0;
};

// Exact discriminant of the polynomial passed in. Throws DegenerateDegree
// unless deg == 5.
DiscriminantClass classify_discriminant(const UniPoly& g);

struct CandidateRoot {
  BigRational value;  // within the refinement width of the root
  double approx = 0;
  int multiplicity = 1;
  RootInterval interval;
};

// Distinct real roots of g strictly inside (0, a), ascending.
std::vector<CandidateRoot> find_candidate_roots(const UniPoly& g, const BigRational& a,
                                                const BigRational& width = default_refine_width());

// The admissible (stabilizing) root of player one's stationarity quadratic.
double recover_k1(const NormalizedGame& norm, double k2);

struct NashEquilibrium {
  double k1 = 0, k2 = 0;  // in the caller's coordinates
  double k1_normalized = 0, k2_normalized = 0;
  double a_cl = 0;  // raw closed loop a - b1 k1 - b2 k2
  double j1 = 0, j2 = 0;
  double residual_norm = 0;  // max |rho_i| at the normalized pair
  int root_multiplicity = 1;
};

struct TheoremFlags {
  bool existence = false;         // at least one equilibrium
  bool at_most_three = false;     // no more than three
  bool delta_consistent = false;  // delta < 0 => one (and three real roots), delta = 0 => at most two
  bool outer_roots = false;       // g(0) > 0, g(a) < 0, a root below 0 and one above a

  bool all() const { return existence && at_most_three && delta_consistent && outer_roots; }
};

struct SolveReport {
  GameParams params;
  NormalizedGame game;
  UniPoly g;  // 2-scaled
  BigRational delta;  // of the unscaled g: disc(2g) / 2^8
  int delta_sign = 0;
  int real_roots_total = 0;
  int roots_below_zero = 0;
  int roots_in_range = 0;
  int roots_above_a = 0;
  std::vector<NashEquilibrium> equilibria;
  TheoremFlags flags;
};

struct SolveOptions {
  double tol_verify = 1e-8;
  BigRational refine_width = default_refine_width();
};

// Full pipeline: normalize, build g, classify, isolate roots in (0, a),
// recover k1, verify, denormalize. Throws TrivialGame, InvalidParameters,
// DegenerateDegree, or ConsistencyError.
SolveReport solve(const GameParams& params, const SolveOptions& options = {});

// Same pipeline on an already canonical game.
SolveReport solve_normalized(const NormalizedGame& game, const SolveOptions& options = {});

// Number of distinct roots of g in (0, a), i.e. the number of equilibria,
// without refinement or verification.
int count_equilibria(const NormalizedGame& game);

}  // namespace lqnash
