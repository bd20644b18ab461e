#include "hamrecon/exact.hpp"

#include "hamrecon/errors.hpp"

namespace hamrecon {

BigInt binomial(long m, long j) {
  if (j < 0) return 0;
  if (m >= 0) {
    if (j > m) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
    return out;
  }
  // C(m, j) = (-1)^j C(j - m - 1, j) for negative m.
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(j - m - 1), static_cast<unsigned long>(j));
  return (j % 2) ? BigInt(-out) : out;
}

BigInt power(long base, unsigned long exponent) {
  BigInt out;
  BigInt b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

Rational parse_rational(std::string_view text) {
  Rational out;
  if (text.empty() || out.set_str(std::string(text), 10) != 0) {
    throw ParameterError("not an exact rational: '" + std::string(text) + "'");
  }
  if (out.get_den() == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
  out.canonicalize();
  return out;
}

}  // namespace hamrecon
