#include "lqnash/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lqnash {

std::strong_ordering lex_compare(const Monomial& m1, const Monomial& m2) {
  if (auto c = m1.e1 <=> m2.e1; c != 0) return c;
  return m1.e2 <=> m2.e2;
}

Monomial lcm(const Monomial& a, const Monomial& b) { return {std::max(a.e1, b.e1), std::max(a.e2, b.e2)}; }

Monomial operator*(const Monomial& a, const Monomial& b) { return {a.e1 + b.e1, a.e2 + b.e2}; }

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::invalid_argument("monomial does not divide");
  return {a.e1 - b.e1, a.e2 - b.e2};
}

MultiPoly MultiPoly::term(const BigRational& c, Monomial m) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const BigRational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

BigRational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

bool MultiPoly::is_univariate_in_k2() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.e1 == 0; });
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return {};
  BigRational inv = 1 / leading_coefficient();
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c *= inv;
  return out;
}

void MultiPoly::add_term(const Monomial& m, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void MultiPoly::add_scaled(const MultiPoly& other, const BigRational& c, const Monomial& m) {
  if (c == 0) return;
  for (const auto& [mono, coef] : other.terms_) add_term(mono * m, coef * c);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  for (const auto& [m, c] : rhs.terms_) out.add_scaled(lhs, c, m);
  return out;
}

MultiPoly operator*(MultiPoly lhs, const BigRational& c) {
  if (c == 0) return {};
  for (auto& [m, coef] : lhs.terms_) coef *= c;
  return lhs;
}

MultiPoly from_unipoly_k2(const UniPoly& p) {
  MultiPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term({0, static_cast<unsigned>(i)}, p.coeff(static_cast<std::size_t>(i)));
  return out;
}

UniPoly to_unipoly_k2(const MultiPoly& p) {
  if (!p.is_univariate_in_k2()) throw std::invalid_argument("polynomial involves k1");
  std::vector<BigRational> coeffs;
  for (const auto& [m, c] : p.terms()) {
    if (coeffs.size() <= m.e2) coeffs.resize(m.e2 + 1, BigRational(0));
    coeffs[m.e2] = c;
  }
  return UniPoly(std::move(coeffs));
}

std::vector<UniPoly> coefficients_in_k1(const MultiPoly& p) {
  std::vector<std::vector<BigRational>> raw;
  for (const auto& [m, c] : p.terms()) {
    if (raw.size() <= m.e1) raw.resize(m.e1 + 1);
    auto& row = raw[m.e1];
    if (row.size() <= m.e2) row.resize(m.e2 + 1, BigRational(0));
    row[m.e2] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    BigRational mag = abs(c);
    bool constant = m.e1 == 0 && m.e2 == 0;
    bool show_coeff = mag != 1 || constant;
    if (show_coeff) os << mag.get_str();
    auto var = [&](const char* name, unsigned e) {
      if (e == 0) return;
      if (show_coeff) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      show_coeff = true;
    };
    var("k1", m.e1);
    var("k2", m.e2);
    first = false;
  }
  return os.str();
}

}  // namespace lqnash
