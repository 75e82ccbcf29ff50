#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "lqnash/game.hpp"
#include "lqnash/rational.hpp"
#include "lqnash/unipoly.hpp"

namespace lqnash::testing {

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

// a in (0, 4], q and r log-uniform on [1e-2, 1e2], b in {+-2, +-1, +-1/2}.
inline GameParams random_game(std::mt19937_64& rng) {
  static const double kB[] = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  std::uniform_real_distribution<double> ua(0.0, 4.0);
  std::uniform_int_distribution<int> ub(0, 5);
  double a = 0;
  while (a == 0) a = 4.0 - ua(rng);
  return GameParams::from_doubles(a, log_uniform(rng, 1e-2, 1e2), log_uniform(rng, 1e-2, 1e2),
                                  log_uniform(rng, 1e-2, 1e2), log_uniform(rng, 1e-2, 1e2), kB[ub(rng)],
                                  kB[ub(rng)]);
}

// Small-denominator rational in [lo, hi].
inline BigRational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 12) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(lo * d, hi * d);
  return ratio(num(rng), d);
}

inline BigRational random_positive_rational(std::mt19937_64& rng, long hi, long max_den = 12) {
  BigRational v;
  do v = random_rational(rng, 0, hi, max_den);
  while (v <= 0);
  return v;
}

// Canonical game with a in (0, 4] and weights in (0, 10], small denominators.
inline GameParams random_rational_game(std::mt19937_64& rng) {
  GameParams p;
  do p.a = random_positive_rational(rng, 4);
  while (p.a > 4);
  p.q1 = random_positive_rational(rng, 10);
  p.q2 = random_positive_rational(rng, 10);
  p.r1 = random_positive_rational(rng, 10);
  p.r2 = random_positive_rational(rng, 10);
  return p;
}

// prod (x - roots[i]) * lead.
inline UniPoly from_roots(const std::vector<BigRational>& roots, const BigRational& lead = 1) {
  UniPoly p = UniPoly::constant(lead);
  for (const auto& r : roots) p *= UniPoly{-r, BigRational(1)};
  return p;
}

// Root of a polynomial bracketed by a sign change, by plain double bisection.
template <typename F>
double bisect(F f, double lo, double hi, int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace lqnash::testing
