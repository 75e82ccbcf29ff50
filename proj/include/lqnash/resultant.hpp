#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lqnash/rational.hpp"
#include "lqnash/unipoly.hpp"

namespace lqnash {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Sylvester matrix of two polynomials given by coefficient lists (lowest
// power first, last entry nonzero). The first deg(b) rows hold shifted copies
// of a, the remaining deg(a) rows shifted copies of b, highest power leftmost.
template <typename T>
Matrix<T> sylvester_layout(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
  if (a.size() < 2 || b.size() < 2) throw std::invalid_argument("sylvester matrix needs two polynomials of degree >= 1");
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  const std::size_t size = m + n;
  Matrix<T> out(size, std::vector<T>(size, zero));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t j = 0; j <= m; ++j) out[row][row + j] = a[m - j];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t j = 0; j <= n; ++j) out[n + row][row + j] = b[n - j];
  return out;
}

// Fraction-free (Bareiss) determinant over an integral domain. `is_zero`
// tests for the additive identity, `exact_div(x, y)` must return x / y when
// y divides x exactly, which Bareiss guarantees for every division it makes.
template <typename T, typename IsZero, typename ExactDiv>
T bareiss_determinant(Matrix<T> m, const T& one, IsZero is_zero, ExactDiv exact_div) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return T(one - one);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T cross = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(cross, prev);
      }
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? T(-det) : det;
}

Matrix<BigRational> sylvester_matrix(const UniPoly& a, const UniPoly& b);

// Exact determinant. Rows are scaled to integers and reduced with Bareiss
// over Z, so no intermediate carries a denominator.
BigRational determinant(const Matrix<BigRational>& m);

// Res(a, b) = det(sylvester_matrix(a, b)).
BigRational resultant(const UniPoly& a, const UniPoly& b);

// Res(a, b) by the Euclidean remainder recurrence over Q. Independent of the
// determinant route; used to cross-check it.
BigRational resultant_euclidean(const UniPoly& a, const UniPoly& b);

// (-1)^(n(n-1)/2) Res(p, p') / lc(p). Throws std::invalid_argument for
// degree < 2.
BigRational discriminant(const UniPoly& p);
BigRational discriminant_euclidean(const UniPoly& p);

// Resultant with respect to the main variable of two polynomials whose
// coefficients (lowest power first) are polynomials in a second variable.
// The result is a polynomial in that second variable.
UniPoly resultant_over_polynomials(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b);

// Principal subresultant coefficients psc_0 .. psc_{n-1} of a (degree m) and
// b (degree n <= m), same coefficient convention. psc_0 is the resultant.
// Wherever the leading coefficient of a does not vanish, the degree of the
// gcd of the specialized pair is the smallest j with psc_j != 0.
std::vector<UniPoly> principal_subresultants(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b);

}  // namespace lqnash
