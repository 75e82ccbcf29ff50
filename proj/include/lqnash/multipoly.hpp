#pragma once

#include <compare>
#include <map>
#include <string>

#include "lqnash/rational.hpp"
#include "lqnash/unipoly.hpp"

namespace lqnash {

// k1^e1 * k2^e2.
struct Monomial {
  unsigned e1 = 0;
  unsigned e2 = 0;

  unsigned total_degree() const { return e1 + e2; }
  bool divides(const Monomial& other) const { return e1 <= other.e1 && e2 <= other.e2; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Lex with k1 > k2.
std::strong_ordering lex_compare(const Monomial& m1, const Monomial& m2);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
// a / b; b must divide a.
Monomial operator/(const Monomial& a, const Monomial& b);

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

// Sparse polynomial in (k1, k2) over Q. Terms are kept in decreasing lex
// order; zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, BigRational, LexGreater>;

  MultiPoly() = default;
  static MultiPoly term(const BigRational& c, Monomial m);
  static MultiPoly constant(const BigRational& c) { return term(c, {0, 0}); }
  static MultiPoly k1() { return term(1, {1, 0}); }
  static MultiPoly k2() { return term(1, {0, 1}); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // Leading (lex-largest) monomial and its coefficient. Throw on zero.
  const Monomial& leading_monomial() const;
  const BigRational& leading_coefficient() const;

  BigRational coeff(const Monomial& m) const;
  bool is_univariate_in_k2() const;
  MultiPoly monic() const;

  void add_term(const Monomial& m, const BigRational& c);
  // this += c * m * other
  void add_scaled(const MultiPoly& other, const BigRational& c, const Monomial& m);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const BigRational& c);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

// Univariate k2 polynomial viewed as a MultiPoly, and back. to_unipoly
// throws std::invalid_argument if any term involves k1.
MultiPoly from_unipoly_k2(const UniPoly& p);
UniPoly to_unipoly_k2(const MultiPoly& p);

// Coefficients of p as a polynomial in k1 (lowest power first), each a
// polynomial in k2.
std::vector<UniPoly> coefficients_in_k1(const MultiPoly& p);

std::string to_string(const MultiPoly& p);

}  // namespace lqnash
