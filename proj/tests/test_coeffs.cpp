#include <doctest.h>

#include "hamrecon/coeffs.hpp"
#include "hamrecon/errors.hpp"
#include "hamrecon/krawtchouk.hpp"
#include "support/oracles.hpp"

using namespace hamrecon;

TEST_CASE("regime dispatch") {
  CHECK(regime_of(4, 3, 1) == Regime::I);
  CHECK(regime_of(4, 3, 2) == Regime::III);
  CHECK(regime_of(4, 3, 3) == Regime::III);
  CHECK_FALSE(regime_of(4, 3, 4).has_value());
  CHECK_THROWS_AS(coefficient(3, 4, 3, 4, 0, 0), ParameterError);
  CHECK(regime_of(6, 3, 3) == Regime::I);
  CHECK_FALSE(regime_of(6, 2, 3).has_value());
  CHECK(std::string(to_string(Regime::III)) == "III");
}

TEST_CASE("regime I values") {
  CHECK(r_case_I(3, 4, 2, 1, 0, 1) == 2);
  CHECK(r_case_I(3, 4, 2, 1, 0, 0) == 1);
  // k = 0 reduces to the Krawtchouk value P_j(h; n)
  for (int j = 0; j <= 5; ++j) CHECK(r_case_I(4, 5, 2, 0, 0, j) == krawtchouk_value(4, j, 2, 5));
  CHECK(coefficient(3, 4, 2, 1, 0, 1) == Rational(2));
}

TEST_CASE("triangular system inverts exactly") {
  for (int q : {3, 4, 5}) {
    for (int n = 2; n <= 7; ++n) {
      for (int h = 1; h <= n; ++h) {
        for (int k = n - h + 1; k <= h; ++k) {
          const auto sys = build_triangular(q, n, h, k);
          REQUIRE(sys.dimension == n - k + 1);
          for (int a = 0; a < sys.dimension; ++a) {
            CHECK(sys.U[a][a] == 1);
            for (int b = 0; b < sys.dimension; ++b) {
              Rational sum = 0;
              for (int c = 0; c < sys.dimension; ++c) sum += Rational(sys.U[a][c]) * sys.Uinv[c][b];
              CHECK(sum == Rational(a == b ? 1 : 0));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("coefficient table") {
  const CoefficientTable t(3, 4, 3, 2);
  CHECK(t.regime() == Regime::III);
  CHECK(t.J() == 2);
  CHECK(t.at(2, 1) == 0);
  CHECK(t.at(0, 2) == r_case_III(3, 4, 3, 2, 0, 2));
  for (int j = 0; j <= t.J(); ++j) {
    for (int i = 0; i <= j; ++i) CHECK(t.at(i, j) == coefficient(3, 4, 3, 2, i, j));
  }
}

TEST_CASE("eigen sums") {
  const auto s = eigen_sums(3, 4, 2, 2, 1);
  REQUIRE(s.sums.size() == 2);
  CHECK(s.sums[0] == 1);
  CHECK(s.sums[1] == 3);
  CHECK_FALSE(s.has_zero());
}

TEST_CASE("eigen sums are the eigenvalues of the dense layer operator") {
  for (auto [q, n] : {std::pair{3, 3}, {3, 4}, {4, 3}, {3, 5}}) {
    for (int h = 1; h <= n; ++h) {
      for (int d = 1; d <= h; ++d) {
        for (int k = 1; k <= d; ++k) {
          const auto m = oracle::layer_operator(q, n, h, d, k);
          const auto s = eigen_sums(q, n, h, d, k);
          Rational trace = 0;
          for (std::size_t a = 0; a < m.size(); ++a) trace += m[a][a];
          Rational expected = 0;
          for (int l = 0; l <= k; ++l) {
            expected += s.sums[l] * Rational(BigInt(binomial(k, l) * power(q - 2, static_cast<unsigned long>(l))));
          }
          CHECK(trace == expected);
          CHECK((oracle::exact_rank(m) < m.size()) == s.has_zero());
        }
      }
    }
  }
}

TEST_CASE("condition report") {
  const auto bad = check_conditions(3, 4, 3, 2);
  CHECK(bad.origin_ok);
  CHECK_FALSE(bad.pass());
  REQUIRE(bad.failures.size() >= 1);
  CHECK(bad.failures[0].k == 1);
  CHECK(bad.failures[0].l == 1);
  CHECK(bad.failures[0].sum == 0);

  const auto origin = check_conditions(3, 3, 2, 1);
  CHECK(origin.origin_value == 0);
  CHECK_FALSE(origin.origin_ok);

  const auto good = check_conditions(3, 4, 2, 2);
  CHECK(good.pass());
  CHECK(good.origin_value == krawtchouk_value(3, 2, 2, 4));

  CHECK(check_conditions(3, 4, 2, 0).pass());
  CHECK_THROWS_AS(check_conditions(3, 4, 2, 3), ParameterError);
}

TEST_CASE("coefficients serialize exactly") {
  for (int h = 0; h <= 5; ++h) {
    for (int k = 0; k <= h; ++k) {
      if (!regime_of(5, h, k)) continue;
      const CoefficientTable t(4, 5, h, k);
      for (int j = 0; j <= t.J(); ++j) {
        for (int i = 0; i <= j; ++i) CHECK(parse_rational(to_string(t.at(i, j))) == t.at(i, j));
      }
    }
  }
}
