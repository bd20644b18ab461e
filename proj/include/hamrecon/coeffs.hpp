#pragma once

// Exact transfer coefficients between local distributions in orthogonal faces, and the
// nondegeneracy sums that decide whether a sphere determines the enclosed ball.
// Everything here is exact integer/rational arithmetic.

#include <optional>
#include <vector>

#include "hamrecon/exact.hpp"

namespace hamrecon {

/// Face dimension k relative to eigenvalue index h:
///   regime I:   k <= min(h, n-h)
///   regime III: n-h < k <= h
enum class Regime { I, III };

std::optional<Regime> regime_of(int n, int h, int k);
const char* to_string(Regime regime);

/// r_ij for regime I: (-1)^i sum_l P^{(q)}_{j-i-l}(h-k; n-2k) (q-2)^l C(k-i, l).
BigInt r_case_I(int q, int n, int h, int k, int i, int j);

/// U[j][i] = (q-1)^(j-i) C(h+k-n, j-i), 0 <= i <= j <= n-k, and its exact inverse.
struct TriangularSystem {
  int dimension = 0;
  std::vector<std::vector<BigInt>> U;
  std::vector<std::vector<Rational>> Uinv;
};

TriangularSystem build_triangular(int q, int n, int h, int k);

/// r_ij for regime III: (-1)^i sum_{s=i..j} Uinv[j][s] P^{(q-1)}_{s-i}(h-k; h-i).
Rational r_case_III(const TriangularSystem& system, int q, int h, int k, int i, int j);
Rational r_case_III(int q, int n, int h, int k, int i, int j);

/// Dispatches on the regime; throws ParameterError for k > h.
Rational coefficient(int q, int n, int h, int k, int i, int j);

/// All r_ij, 0 <= i <= j <= n-k, for one (q, n, h, k).
class CoefficientTable {
 public:
  CoefficientTable(int q, int n, int h, int k);

  int q() const { return q_; }
  int n() const { return n_; }
  int h() const { return h_; }
  int k() const { return k_; }
  Regime regime() const { return regime_; }
  /// Largest column index n - k.
  int J() const { return n_ - k_; }
  /// Zero above the diagonal (i > j).
  Rational at(int i, int j) const;

 private:
  int q_, n_, h_, k_;
  Regime regime_;
  std::vector<std::vector<Rational>> entries_;  // entries_[j][i]
};

/// sums[l] = sum_{i=0}^{min(k, d-k)} r^k_{i,d-k} P^{(q-1)}_i(l; k), l = 0..k:
/// the eigenvalues of the layer operator on the (q-1)-ary k-dimensional scheme.
struct EigenSums {
  int q = 0, n = 0, h = 0, d = 0, k = 0;
  std::vector<Rational> sums;

  bool has_zero() const;
};

EigenSums eigen_sums(int q, int n, int h, int d, int k);

struct ConditionFailure {
  int k = 0;
  int l = 0;
  Rational sum;
};

struct ConditionReport {
  int q = 0, n = 0, h = 0, d = 0;
  BigInt origin_value;  ///< P^{(q)}_d(h; n)
  bool origin_ok = false;
  std::vector<ConditionFailure> failures;

  bool pass() const { return origin_ok && failures.empty(); }
};

/// Origin condition P_d(h; n) != 0 and eigen sums nonzero for every layer k = 1..d.
ConditionReport check_conditions(int q, int n, int h, int d);

}  // namespace hamrecon
