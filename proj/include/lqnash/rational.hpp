#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace lqnash {

// Exact rational. gmp keeps every result canonical (reduced, positive
// denominator), which is the only representation the rest of the library
// relies on.
using BigRational = mpq_class;
using BigInteger = mpz_class;

// Parses "7/2", "-3", "0.1", "1e-4", "2.5E3". Decimal inputs are taken at
// face value, i.e. "0.1" is 1/10, not the nearest double.
std::optional<BigRational> parse_rational(std::string_view text);

// Shortest decimal that round-trips the double, read back exactly.
// 0.0001 becomes 1/10000 rather than the binary expansion of the double.
BigRational rational_from_decimal_double(double value);

// Exact binary value of the double.
BigRational rational_from_double(double value);

// num / den reduced. mpq_class(num, den) alone leaves the fraction as given,
// and gmp's arithmetic assumes canonical operands.
BigRational ratio(long num, long den);

double to_double(const BigRational& value);

int sign(const BigRational& value);

BigRational abs(const BigRational& value);

// 2^exponent, exponent may be negative.
BigRational pow2(long exponent);

BigRational pow(const BigRational& base, unsigned exponent);

std::string to_string(const BigRational& value);

}  // namespace lqnash
