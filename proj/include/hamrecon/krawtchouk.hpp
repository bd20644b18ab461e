#pragma once

#include <vector>

#include "hamrecon/exact.hpp"

namespace hamrecon {

/// P^{(q)}_i(t; N) = sum_j (-1)^j (q-1)^{i-j} C(t, j) C(N-t, i-j).
/// Requires q >= 2 and 0 <= i, t <= N.
BigInt krawtchouk_value(int q, int i, int t, int N);

/// The same alternating sum for arbitrary integer arguments, using the generalized binomial.
/// Zero for i < 0. Used where transfer formulas step outside the tabulated range.
BigInt krawtchouk_extended(int q, long i, long t, long N);

/// Coefficients of y^i x^{N-i} in (x - y)^t (x + (q-1) y)^{N-t}, i = 0..N, by polynomial multiplication.
std::vector<BigInt> generating_coefficients(int q, int t, int N);

/// values[i][t] = P^{(q)}_i(t; N) for 0 <= i, t <= N.
class KrawtchoukTable {
 public:
  KrawtchoukTable(int q, int N);

  int q() const { return q_; }
  int N() const { return N_; }
  const BigInt& at(int i, int t) const;

 private:
  int q_;
  int N_;
  std::vector<std::vector<BigInt>> values_;
};

/// Eigenvalue index h and eigenvalue lambda = (q-1)n - qh of the q-ary n-cube.
struct SpectralIndex {
  int h = 0;
  long lambda = 0;
};

SpectralIndex eigenvalue_of_index(int q, int n, int h);
/// Throws ParameterError if lambda is not an eigenvalue of the cube.
SpectralIndex index_of_eigenvalue(int q, int n, long lambda);

}  // namespace hamrecon
