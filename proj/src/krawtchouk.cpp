#include "hamrecon/krawtchouk.hpp"

#include <string>

#include "hamrecon/errors.hpp"

namespace hamrecon {

BigInt krawtchouk_extended(int q, long i, long t, long N) {
  BigInt sum = 0;
  for (long j = 0; j <= i; ++j) {
    BigInt term = power(q - 1, static_cast<unsigned long>(i - j)) * binomial(t, j) * binomial(N - t, i - j);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

BigInt krawtchouk_value(int q, int i, int t, int N) {
  if (q < 2) throw ParameterError("krawtchouk_value: q must be at least 2");
  if (N < 0 || i < 0 || i > N || t < 0 || t > N) {
    throw ParameterError("krawtchouk_value: indices outside [0, N] (i=" + std::to_string(i) +
                         ", t=" + std::to_string(t) + ", N=" + std::to_string(N) + ")");
  }
  return krawtchouk_extended(q, i, t, N);
}

std::vector<BigInt> generating_coefficients(int q, int t, int N) {
  if (q < 2 || N < 0 || t < 0 || t > N) throw ParameterError("generating_coefficients: need 0 <= t <= N");
  // Coefficient vectors indexed by the power of y.
  std::vector<BigInt> poly{1};
  auto multiply = [&poly](const BigInt& x_coef, const BigInt& y_coef) {
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i] * x_coef;
      next[i + 1] += poly[i] * y_coef;
    }
    poly = std::move(next);
  };
  for (int s = 0; s < t; ++s) multiply(1, -1);
  for (int s = 0; s < N - t; ++s) multiply(1, q - 1);
  return poly;
}

KrawtchoukTable::KrawtchoukTable(int q, int N) : q_(q), N_(N) {
  if (q < 2 || N < 0) throw ParameterError("KrawtchoukTable: need q >= 2 and N >= 0");
  values_.assign(static_cast<std::size_t>(N) + 1, std::vector<BigInt>(static_cast<std::size_t>(N) + 1));
  for (int i = 0; i <= N; ++i) {
    for (int t = 0; t <= N; ++t) values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] = krawtchouk_value(q, i, t, N);
  }
}

const BigInt& KrawtchoukTable::at(int i, int t) const {
  if (i < 0 || i > N_ || t < 0 || t > N_) throw ParameterError("KrawtchoukTable::at: index outside [0, N]");
  return values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
}

SpectralIndex eigenvalue_of_index(int q, int n, int h) {
  if (h < 0 || h > n) throw ParameterError("eigenvalue index h must lie in [0, n]");
  return {h, static_cast<long>(q - 1) * n - static_cast<long>(q) * h};
}

SpectralIndex index_of_eigenvalue(int q, int n, long lambda) {
  const long gap = static_cast<long>(q - 1) * n - lambda;
  if (gap < 0 || gap % q != 0 || gap / q > n) {
    throw ParameterError(std::to_string(lambda) + " is not an eigenvalue of the " + std::to_string(q) + "-ary " +
                         std::to_string(n) + "-cube");
  }
  return {static_cast<int>(gap / q), lambda};
}

}  // namespace hamrecon
