#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hamrecon {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient for any integer upper index m: m(m-1)...(m-j+1)/j!.
/// Zero when j < 0, or when 0 <= m < j.
BigInt binomial(long m, long j);

BigInt power(long base, unsigned long exponent);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);
Rational parse_rational(std::string_view text);

}  // namespace hamrecon
