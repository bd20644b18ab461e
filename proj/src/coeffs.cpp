#include "hamrecon/coeffs.hpp"

#include <algorithm>
#include <string>

#include "hamrecon/errors.hpp"
#include "hamrecon/krawtchouk.hpp"

namespace hamrecon {
namespace {

void check_basic(int q, int n, int h, int k) {
  if (q < 3) throw ParameterError("transfer coefficients need q >= 3");
  if (n < 1 || h < 0 || h > n || k < 0 || k > n) {
    throw ParameterError("transfer coefficients need 0 <= h, k <= n");
  }
}

void check_indices(int i, int j, int J) {
  if (i < 0 || j < 0 || j > J) {
    throw ParameterError("coefficient index outside 0 <= i, j <= n-k (i=" + std::to_string(i) +
                         ", j=" + std::to_string(j) + ")");
  }
}

std::string describe(int n, int h, int k) {
  return "(n=" + std::to_string(n) + ", h=" + std::to_string(h) + ", k=" + std::to_string(k) + ")";
}

}  // namespace

std::optional<Regime> regime_of(int n, int h, int k) {
  if (k <= std::min(h, n - h)) return Regime::I;
  if (n - h < k && k <= h) return Regime::III;
  return std::nullopt;
}

const char* to_string(Regime regime) { return regime == Regime::I ? "I" : "III"; }

BigInt r_case_I(int q, int n, int h, int k, int i, int j) {
  check_basic(q, n, h, k);
  if (regime_of(n, h, k) != Regime::I) throw ParameterError("r_case_I requires k <= min(h, n-h) " + describe(n, h, k));
  check_indices(i, j, n - k);
  if (i > j) return 0;
  BigInt sum = 0;
  for (int l = 0; l <= j - i; ++l) {
    sum += krawtchouk_extended(q, j - i - l, h - k, n - 2 * k) * power(q - 2, static_cast<unsigned long>(l)) *
           binomial(k - i, l);
  }
  return (i % 2) ? BigInt(-sum) : sum;
}

TriangularSystem build_triangular(int q, int n, int h, int k) {
  check_basic(q, n, h, k);
  if (regime_of(n, h, k) != Regime::III) {
    throw ParameterError("build_triangular requires n-h < k <= h " + describe(n, h, k));
  }
  TriangularSystem sys;
  sys.dimension = n - k + 1;
  const auto m = static_cast<std::size_t>(sys.dimension);
  sys.U.assign(m, std::vector<BigInt>(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const auto gap = static_cast<long>(j - i);
      sys.U[j][i] = power(q - 1, static_cast<unsigned long>(gap)) * binomial(h + k - n, gap);
    }
  }
  // Forward substitution, one column of the inverse at a time.
  sys.Uinv.assign(m, std::vector<Rational>(m, 0));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t r = c; r < m; ++r) {
      Rational acc = (r == c) ? 1 : 0;
      for (std::size_t t = c; t < r; ++t) acc -= Rational(sys.U[r][t]) * sys.Uinv[t][c];
      sys.Uinv[r][c] = acc / Rational(sys.U[r][r]);
    }
  }
  return sys;
}

Rational r_case_III(const TriangularSystem& system, int q, int h, int k, int i, int j) {
  check_indices(i, j, system.dimension - 1);
  if (i > j) return 0;
  Rational sum = 0;
  for (int s = i; s <= j; ++s) {
    sum += system.Uinv[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] *
           Rational(krawtchouk_extended(q - 1, s - i, h - k, h - i));
  }
  if (i % 2) sum = -sum;
  return sum;
}

Rational r_case_III(int q, int n, int h, int k, int i, int j) {
  return r_case_III(build_triangular(q, n, h, k), q, h, k, i, j);
}

Rational coefficient(int q, int n, int h, int k, int i, int j) {
  check_basic(q, n, h, k);
  if (k > h) throw ParameterError("no transfer formula for k > h " + describe(n, h, k));
  if (k <= n - h) return Rational(r_case_I(q, n, h, k, i, j));
  return r_case_III(q, n, h, k, i, j);
}

CoefficientTable::CoefficientTable(int q, int n, int h, int k) : q_(q), n_(n), h_(h), k_(k) {
  check_basic(q, n, h, k);
  if (k > h) throw ParameterError("no transfer formula for k > h " + describe(n, h, k));
  regime_ = k <= n - h ? Regime::I : Regime::III;
  const int J = n - k;
  entries_.resize(static_cast<std::size_t>(J) + 1);
  std::optional<TriangularSystem> system;
  if (regime_ == Regime::III) system = build_triangular(q, n, h, k);
  for (int j = 0; j <= J; ++j) {
    auto& row = entries_[static_cast<std::size_t>(j)];
    row.resize(static_cast<std::size_t>(j) + 1);
    for (int i = 0; i <= j; ++i) {
      row[static_cast<std::size_t>(i)] =
          regime_ == Regime::I ? Rational(r_case_I(q, n, h, k, i, j)) : r_case_III(*system, q, h, k, i, j);
    }
  }
}

Rational CoefficientTable::at(int i, int j) const {
  check_indices(i, j, J());
  if (i > j) return 0;
  return entries_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

bool EigenSums::has_zero() const {
  return std::any_of(sums.begin(), sums.end(), [](const Rational& s) { return sgn(s) == 0; });
}

EigenSums eigen_sums(int q, int n, int h, int d, int k) {
  if (!(1 <= k && k <= d && d <= h && h <= n)) {
    throw ParameterError("eigen_sums requires 1 <= k <= d <= h <= n");
  }
  const CoefficientTable table(q, n, h, k);
  EigenSums out{q, n, h, d, k, {}};
  out.sums.resize(static_cast<std::size_t>(k) + 1);
  // r^k_{i,d-k} vanishes for i > d-k, so the sum stops at min(k, d-k).
  const int top = std::min(k, d - k);
  for (int l = 0; l <= k; ++l) {
    Rational acc = 0;
    for (int i = 0; i <= top; ++i) acc += table.at(i, d - k) * Rational(krawtchouk_value(q - 1, i, l, k));
    out.sums[static_cast<std::size_t>(l)] = acc;
  }
  return out;
}

ConditionReport check_conditions(int q, int n, int h, int d) {
  if (q < 3) throw ParameterError("q must be at least 3");
  if (n < 1 || h < 0 || h > n) throw ParameterError("need 0 <= h <= n");
  if (d < 0 || d > h) throw ParameterError("need 0 <= d <= h");
  ConditionReport report;
  report.q = q;
  report.n = n;
  report.h = h;
  report.d = d;
  report.origin_value = krawtchouk_value(q, d, h, n);
  report.origin_ok = sgn(report.origin_value) != 0;
  for (int k = 1; k <= d; ++k) {
    const EigenSums es = eigen_sums(q, n, h, d, k);
    for (int l = 0; l <= k; ++l) {
      if (sgn(es.sums[static_cast<std::size_t>(l)]) == 0) report.failures.push_back({k, l, es.sums[static_cast<std::size_t>(l)]});
    }
  }
  return report;
}

}  // namespace hamrecon
