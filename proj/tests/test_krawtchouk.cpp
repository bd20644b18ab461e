#include <doctest.h>

#include "hamrecon/errors.hpp"
#include "hamrecon/krawtchouk.hpp"

using namespace hamrecon;

TEST_CASE("krawtchouk values") {
  for (int t = 0; t <= 5; ++t) CHECK(krawtchouk_value(3, 0, t, 5) == 1);
  // j=0 gives 2*C(3,1) = 6, j=1 gives -1.
  CHECK(krawtchouk_value(3, 1, 1, 4) == 5);
  for (int q : {2, 3, 4, 5}) {
    for (int i = 0; i <= 6; ++i) CHECK(krawtchouk_value(q, i, 0, 6) == power(q - 1, static_cast<unsigned long>(i)) * binomial(6, i));
  }
  CHECK_THROWS_AS(krawtchouk_value(3, 5, 1, 4), ParameterError);
  CHECK_THROWS_AS(krawtchouk_value(3, 1, -1, 4), ParameterError);
  CHECK_THROWS_AS(krawtchouk_value(1, 1, 1, 4), ParameterError);
}

TEST_CASE("generating function coefficients") {
  const auto c = generating_coefficients(3, 0, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == 1);
  CHECK(c[1] == 4);
  CHECK(c[2] == 4);
  CHECK(generating_coefficients(3, 1, 4)[1] == 5);
}

TEST_CASE("defining sum matches the generating function") {
  for (int q : {2, 3, 4, 5}) {
    for (int N = 0; N <= 12; ++N) {
      for (int t = 0; t <= N; ++t) {
        const auto coefs = generating_coefficients(q, t, N);
        for (int i = 0; i <= N; ++i) CHECK(krawtchouk_value(q, i, t, N) == coefs[static_cast<std::size_t>(i)]);
      }
    }
  }
}

TEST_CASE("degree-one krawtchouk is the cube eigenvalue") {
  for (int q : {3, 4, 5}) {
    for (int n = 1; n <= 8; ++n) {
      for (int h = 0; h <= n; ++h) {
        const auto idx = eigenvalue_of_index(q, n, h);
        CHECK(krawtchouk_value(q, 1, h, n) == idx.lambda);
        CHECK(index_of_eigenvalue(q, n, idx.lambda).h == h);
      }
    }
  }
}

TEST_CASE("eigenvalue index conversions") {
  CHECK(eigenvalue_of_index(3, 4, 0).lambda == 8);
  CHECK(eigenvalue_of_index(3, 4, 1).lambda == 5);
  CHECK_THROWS_AS(index_of_eigenvalue(3, 4, 7), ParameterError);
  CHECK_THROWS_AS(index_of_eigenvalue(3, 4, 11), ParameterError);
  CHECK_THROWS_AS(eigenvalue_of_index(3, 4, 5), ParameterError);
}

TEST_CASE("table") {
  const KrawtchoukTable table(4, 5);
  for (int t = 0; t <= 5; ++t) CHECK(table.at(0, t) == 1);
  for (int i = 0; i <= 5; ++i) CHECK(table.at(i, 0) == power(3, static_cast<unsigned long>(i)) * binomial(5, i));
  CHECK_THROWS_AS(table.at(6, 0), ParameterError);
}

TEST_CASE("binomial conventions") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
}
