#pragma once

#include <optional>
#include <vector>

#include "lqnash/game.hpp"
#include "lqnash/sturm.hpp"
#include "lqnash/unipoly.hpp"

namespace lqnash {

// Discriminant of the (unscaled) elimination polynomial as an exact
// polynomial in a, for fixed canonical weights.
UniPoly discriminant_in_a(const BigRational& q1, const BigRational& q2, const BigRational& r1,
                          const BigRational& r2);

// Roots of discriminant_in_a in (lo, hi], ascending.
std::vector<RootInterval> discriminant_roots_in_a(const BigRational& q1, const BigRational& q2,
                                                  const BigRational& r1, const BigRational& r2,
                                                  const BigRational& lo, const BigRational& hi);

// A canonical game whose best-response curves touch at (k1, k2), so that the
// elimination polynomial has a double root at k2 and the discriminant is
// exactly zero.
struct TangentGame {
  NormalizedGame game;
  BigRational k1, k2, a_cl;
};

// With c = a - k1 - k2 in (0, 1) the curves are tangent iff
// a (1 - c^2)^2 = 4 c k1 k2, and the weights that make (k1, k2) stationary
// are q_i / r_i = k_i (1 - c^2 - c k_i) / c. Given c and k1 this fixes k2,
// a and the ratios (r1 = r2 = 1). Empty when the result is not a valid game.
std::optional<TangentGame> tangent_game(const BigRational& c, const BigRational& k1);

// Tangent games inside a family with q1, r1, q2 fixed and r2 free, at closed
// loop c. k1 solves c k1^2 - (1 - c^2) k1 + c q1/r1 = 0, so a rational game
// exists only when that quadratic has rational roots.
std::vector<TangentGame> tangent_games_in_family(const BigRational& q1, const BigRational& r1,
                                                 const BigRational& q2, const BigRational& c);

// Certified equilibrium count at an irrational root a* of the discriminant
// along a one-parameter family. The root is bracketed in (lo, hi] by exact
// bisection and the counts on both ends are exact. The count at a* itself
// comes from the degree of gcd(g, g') there, decided exactly with principal
// subresultant coefficients in a.
struct DiscriminantRootWitness {
  BigRational lo, hi;
  int delta_sign_lo = 0, delta_sign_hi = 0;
  int n_lo = 0, n_hi = 0;
  int root_multiplicity = 0;  // of a* in discriminant_in_a
  int gcd_degree = -1;        // deg gcd(g, g') at a*: 1 for one double root, 2 for a triple root or two doubles
  int n_at_root = 0;          // -1 when neither side has delta > 0
  double k2_double_root = 0;  // midpoint of the closest pair on the side with more equilibria
};
DiscriminantRootWitness witness_at_discriminant_root(const BigRational& q1, const BigRational& q2,
                                                     const BigRational& r1, const BigRational& r2,
                                                     const RootInterval& root_in_a, const BigRational& width);

}  // namespace lqnash
