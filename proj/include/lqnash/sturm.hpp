#pragma once

#include <vector>

#include "lqnash/rational.hpp"
#include "lqnash/unipoly.hpp"

namespace lqnash {

// A real number or one of the two infinities.
struct Bound {
  enum class Kind { kNegInf, kFinite, kPosInf };
  Kind kind = Kind::kFinite;
  BigRational value;

  static Bound neg_inf() { return {Kind::kNegInf, BigRational(0)}; }
  static Bound pos_inf() { return {Kind::kPosInf, BigRational(0)}; }
  static Bound at(const BigRational& v) { return {Kind::kFinite, v}; }
};

// p0 = square-free part of p, p1 = p0', p(i+1) = -rem(p(i-1), p(i)).
struct SturmChain {
  std::vector<UniPoly> sequence;
};

SturmChain sturm_chain(const UniPoly& p);

int sign_variations(const SturmChain& chain, const Bound& at);

// Number of distinct real roots of p in (lo, hi].
int sturm_count(const UniPoly& p, const Bound& lo, const Bound& hi);
int sturm_count(const SturmChain& chain, const Bound& lo, const Bound& hi);

// (lo, hi] holds exactly one distinct root of p.
struct RootInterval {
  BigRational lo;
  BigRational hi;
  int multiplicity = 1;
};

// Disjoint isolating intervals for every distinct real root, ascending.
// Endpoints are dyadic rationals.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

// Same, restricted to roots in (lo, hi].
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const BigRational& lo, const BigRational& hi);

// Default refinement width, 2^-60.
BigRational default_refine_width();

// Rational within `width` of the root isolated by `iv`. Works on the
// square-free part, so multiple roots refine like simple ones.
BigRational refine_root(const UniPoly& p, const RootInterval& iv, const BigRational& width);

// Cauchy bound rounded up to a power of two: every root satisfies |x| < bound.
BigRational root_bound(const UniPoly& p);

}  // namespace lqnash
