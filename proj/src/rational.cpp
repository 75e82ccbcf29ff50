#include "lqnash/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <system_error>

namespace lqnash {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<BigInteger> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  BigInteger v(std::string(s), 10);
  return negative ? BigInteger(-v) : v;
}

std::optional<BigRational> parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    auto exp_value = parse_integer(exp_text);
    if (!exp_value || !exp_value->fits_slong_p()) return std::nullopt;
    exponent = exp_value->get_si();
    if (exponent > 4096 || exponent < -4096) return std::nullopt;
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInteger mantissa(digits, 10);
  exponent -= static_cast<long>(frac_part.size());

  BigInteger ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  BigRational out = exponent >= 0 ? BigRational(mantissa * ten_pow) : BigRational(mantissa, ten_pow);
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

}  // namespace

std::optional<BigRational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    BigRational out(*num, *den);
    out.canonicalize();
    return out;
  }
  return parse_decimal(text);
}

BigRational rational_from_decimal_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value has no rational form");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  auto parsed = parse_rational(std::string_view(buf, static_cast<std::size_t>(end - buf)));
  if (!parsed) throw std::runtime_error("could not re-read shortest decimal");
  return *parsed;
}

BigRational rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value has no rational form");
  return BigRational(value);
}

BigRational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational out(num, den);
  out.canonicalize();
  return out;
}

double to_double(const BigRational& value) { return value.get_d(); }

int sign(const BigRational& value) { return sgn(value); }

BigRational abs(const BigRational& value) { return value < 0 ? BigRational(-value) : value; }

BigRational pow2(long exponent) {
  BigInteger p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return BigRational(p);
  return BigRational(BigInteger(1), p);
}

BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::string to_string(const BigRational& value) { return value.get_str(); }

}  // namespace lqnash
