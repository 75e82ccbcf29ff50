#include "lqnash/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace lqnash {

UniPoly::UniPoly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<BigRational> coefficients) : coeffs_(coefficients) { trim(); }

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly(std::vector<BigRational>{c}); }

UniPoly UniPoly::monomial(const BigRational& c, unsigned degree) {
  std::vector<BigRational> coeffs(degree + 1, BigRational(0));
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::identity() { return monomial(1, 1); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational UniPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigRational(0);
}

const BigRational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigRational UniPoly::operator()(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double UniPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  BigRational inv = 1 / leading();
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& other) { return *this = *this * other; }

UniPoly& UniPoly::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

BigRational poly_eval(const UniPoly& p, const BigRational& x) { return p(x); }

UniPoly poly_derivative(const UniPoly& p) { return p.derivative(); }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigRational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {UniPoly(), dividend};

  std::vector<BigRational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1), BigRational(0));
  const BigRational inv_lead = 1 / divisor.leading();
  for (int i = dividend.degree(); i >= dd; --i) {
    BigRational factor = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * divisor.coefficients()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_quotient(const UniPoly& dividend, const UniPoly& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

UniPoly specialize(const std::vector<UniPoly>& coefficients_in_parameter, const BigRational& parameter) {
  std::vector<BigRational> out;
  out.reserve(coefficients_in_parameter.size());
  for (const auto& c : coefficients_in_parameter) out.push_back(c(parameter));
  return UniPoly(std::move(out));
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigRational c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigRational mag = abs(c);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace lqnash
