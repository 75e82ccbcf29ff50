#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lqnash/rational.hpp"

namespace lqnash {

// Dense univariate polynomial over the rationals, coefficients lowest power
// first. Trailing zeros are always trimmed, so the zero polynomial has no
// coefficients and degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coefficients);
  UniPoly(std::initializer_list<BigRational> coefficients);

  static UniPoly constant(const BigRational& c);
  static UniPoly monomial(const BigRational& c, unsigned degree);
  static UniPoly identity();  // x

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  // Coefficient of x^power, zero beyond the degree.
  BigRational coeff(std::size_t power) const;
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  const BigRational& leading() const;

  BigRational operator()(const BigRational& x) const;
  double eval(double x) const;

  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const BigRational& scalar);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(UniPoly lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend UniPoly operator*(const BigRational& lhs, UniPoly rhs) { return rhs *= lhs; }

  friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

// Exact evaluation by Horner's rule.
BigRational poly_eval(const UniPoly& p, const BigRational& x);
UniPoly poly_derivative(const UniPoly& p);

// Euclidean division over Q. Throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor);

// Quotient that must be exact; throws std::logic_error if a remainder is left.
UniPoly exact_quotient(const UniPoly& dividend, const UniPoly& divisor);

// Monic gcd; gcd(0, 0) == 0.
UniPoly gcd(UniPoly a, UniPoly b);

// p / gcd(p, p'), made monic. Same roots as p, all simple.
UniPoly square_free_part(const UniPoly& p);

// Evaluates a polynomial whose coefficients are themselves polynomials in a
// parameter, giving an ordinary polynomial at a fixed parameter value.
UniPoly specialize(const std::vector<UniPoly>& coefficients_in_parameter, const BigRational& parameter);

std::string to_string(const UniPoly& p, const std::string& var = "x");

}  // namespace lqnash
