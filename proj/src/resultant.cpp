#include "lqnash/resultant.hpp"

namespace lqnash {
namespace {

void require_nonconstant(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
  if (p.degree() < 1) throw std::invalid_argument("resultant needs degree >= 1");
}

std::vector<UniPoly> trim_top(std::vector<UniPoly> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

}  // namespace

Matrix<BigRational> sylvester_matrix(const UniPoly& a, const UniPoly& b) {
  require_nonconstant(a);
  require_nonconstant(b);
  return sylvester_layout(a.coefficients(), b.coefficients(), BigRational(0));
}

BigRational determinant(const Matrix<BigRational>& m) {
  const std::size_t n = m.size();
  Matrix<BigInteger> ints(n, std::vector<BigInteger>(n));
  BigInteger scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInteger row_lcm = 1;
    for (const auto& v : m[i]) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) ints[i][j] = m[i][j].get_num() * (row_lcm / m[i][j].get_den());
    scale *= row_lcm;
  }
  BigInteger det = bareiss_determinant(
      std::move(ints), BigInteger(1), [](const BigInteger& x) { return x == 0; },
      [](const BigInteger& x, const BigInteger& y) {
        BigInteger q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        return q;
      });
  BigRational out(det, scale);
  out.canonicalize();
  return out;
}

BigRational resultant(const UniPoly& a, const UniPoly& b) { return determinant(sylvester_matrix(a, b)); }

BigRational resultant_euclidean(const UniPoly& a, const UniPoly& b) {
  require_nonconstant(a);
  require_nonconstant(b);
  // Res(A, B) = (-1)^(mn) lc(B)^(m - deg R) Res(B, R), R = A mod B,
  // and Res(A, c) = c^m for a nonzero constant c.
  UniPoly x = a;
  UniPoly y = b;
  BigRational acc(1);
  while (true) {
    const int m = x.degree();
    const int n = y.degree();
    if (n == 0) return acc * pow(y.leading(), static_cast<unsigned>(m));
    UniPoly r = divmod(x, y).second;
    if (r.is_zero()) return BigRational(0);
    if ((m * n) % 2 != 0) acc = -acc;
    acc *= pow(y.leading(), static_cast<unsigned>(m - r.degree()));
    x = std::move(y);
    y = std::move(r);
  }
}

namespace {

BigRational finish_discriminant(const UniPoly& p, const BigRational& res) {
  const int n = p.degree();
  BigRational out = res / p.leading();
  if (((n * (n - 1)) / 2) % 2 != 0) out = -out;
  return out;
}

void require_degree_two(const UniPoly& p) {
  if (p.degree() < 2) throw std::invalid_argument("discriminant needs degree >= 2");
}

}  // namespace

BigRational discriminant(const UniPoly& p) {
  require_degree_two(p);
  return finish_discriminant(p, resultant(p, p.derivative()));
}

BigRational discriminant_euclidean(const UniPoly& p) {
  require_degree_two(p);
  return finish_discriminant(p, resultant_euclidean(p, p.derivative()));
}

UniPoly resultant_over_polynomials(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b) {
  auto ta = trim_top(a);
  auto tb = trim_top(b);
  if (ta.empty() || tb.empty()) throw std::invalid_argument("resultant of the zero polynomial");
  auto sylvester = sylvester_layout(ta, tb, UniPoly());
  return bareiss_determinant(
      std::move(sylvester), UniPoly::constant(1), [](const UniPoly& p) { return p.is_zero(); },
      [](const UniPoly& x, const UniPoly& y) { return exact_quotient(x, y); });
}

std::vector<UniPoly> principal_subresultants(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b) {
  auto ta = trim_top(a);
  auto tb = trim_top(b);
  if (ta.size() < 2 || tb.size() < 2) throw std::invalid_argument("subresultants need degrees >= 1");
  const std::size_t m = ta.size() - 1;
  const std::size_t n = tb.size() - 1;
  if (n > m) throw std::invalid_argument("subresultants need deg a >= deg b");
  std::vector<UniPoly> out;
  for (std::size_t j = 0; j < n; ++j) {
    // n - j shifted copies of a, m - j of b, keeping the leading m + n - 2j
    // columns (powers m + n - j - 1 down to j).
    const std::size_t size = m + n - 2 * j;
    Matrix<UniPoly> mat(size, std::vector<UniPoly>(size));
    for (std::size_t row = 0; row < n - j; ++row)
      for (std::size_t k = 0; k <= m && row + k < size; ++k) mat[row][row + k] = ta[m - k];
    for (std::size_t row = 0; row < m - j; ++row)
      for (std::size_t k = 0; k <= n && row + k < size; ++k) mat[n - j + row][row + k] = tb[n - k];
    out.push_back(bareiss_determinant(
        std::move(mat), UniPoly::constant(1), [](const UniPoly& p) { return p.is_zero(); },
        [](const UniPoly& x, const UniPoly& y) { return exact_quotient(x, y); }));
  }
  return out;
}

}  // namespace lqnash
