#include <doctest.h>

#include <random>

#include "hamrecon/krawtchouk.hpp"
#include "hamrecon/recon.hpp"
#include "support/oracles.hpp"

using namespace hamrecon;

namespace {

double max_gap(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double ball_error(const BallData& got, const VertexFunction& f) {
  const Cube cube(f.params());
  double worst = 0.0, scale = 0.0;
  for (std::uint32_t r = 0; r < cube.size(); ++r) {
    if (cube.weight(r) > got.radius()) continue;
    worst = std::max(worst, std::abs(got.values()[r] - f[r]));
    scale = std::max(scale, std::abs(f[r]));
  }
  return worst / std::max(scale, 1e-300);
}

}  // namespace

TEST_CASE("origin value") {
  const SchemeParams params{3, 4};
  for (int h = 0; h <= 4; ++h) {
    const auto f = random_eigenfunction(params, h, 5);
    for (int d = 0; d <= 4; ++d) {
      if (krawtchouk_value(3, d, h, 4) == 0) {
        CHECK_THROWS_AS(reconstruct_origin(SphereData::restrict_to(f, d), h), ConditionFailureError);
        continue;
      }
      CHECK(std::abs(reconstruct_origin(SphereData::restrict_to(f, d), h) - f[0]) <= 1e-10);
    }
  }
}

TEST_CASE("sphere and ball containers") {
  const SchemeParams params{3, 3};
  SphereData s(params, 2);
  CHECK(s.domain_size() == 12);
  s.set(Word::parse("120", params), 2.0);
  CHECK(s.at(Word::parse("120", params)) == Complex(2.0));
  CHECK_THROWS_AS(s.set(Word::parse("100", params), 1.0), ParameterError);
  BallData b(params, 1);
  CHECK(b.contains(Word::parse("002", params)));
  CHECK_FALSE(b.contains(Word::parse("012", params)));
  CHECK_THROWS_AS(b.at(Word::parse("012", params)), ParameterError);
  CHECK_THROWS_AS(SphereData(params, 4), ParameterError);
}

TEST_CASE("layer solve agrees with a dense solve") {
  for (auto [q, n, h, d] : {std::tuple{3, 4, 2, 2}, {4, 4, 2, 2}, {3, 5, 3, 3}, {4, 3, 3, 3}, {3, 6, 3, 3}}) {
    const SchemeParams params{q, n};
    REQUIRE(check_conditions(q, n, h, d).pass());
    const auto f = random_eigenfunction(params, h, 77);
    const auto sphere = SphereData::restrict_to(f, d);
    for (int k = 1; k < d; ++k) {
      const IndexSet I = IndexSet::from_mask(n, (1u << k) - 1);
      const auto partial = BallData::restrict_to(f, k - 1);
      const auto rhs = layer_rhs(I, sphere, partial, h);
      const auto solution = solve_layer(LayerSystem{I, rhs, {}}, params, h, d);

      std::vector<Complex> truth;
      for (std::uint32_t r : full_support_ranks(params, I)) truth.push_back(f[r]);
      CHECK(max_gap(solution, truth) <= 1e-9);

      const auto dense = oracle::dense_solve(oracle::layer_operator_numeric(q, n, h, d, k), rhs);
      CHECK(max_gap(dense, solution) <= 1e-9);
    }
  }
}

TEST_CASE("layer solve refuses a singular layer") {
  const auto sums = eigen_sums(3, 4, 3, 2, 1);
  REQUIRE(sums.has_zero());
  std::vector<Complex> rhs(2, 1.0);
  CHECK_THROWS_AS(solve_layer(rhs, sums), ConditionFailureError);
}

TEST_CASE("ball round trip") {
  for (auto [q, n] : {std::pair{3, 3}, {3, 4}, {4, 3}, {3, 5}}) {
    const SchemeParams params{q, n};
    for (int h = 0; h <= n; ++h) {
      for (int d = 0; d <= h; ++d) {
        const auto sphere_of = [&](const VertexFunction& f) { return SphereData::restrict_to(f, d); };
        const auto f = random_eigenfunction(params, h, 1000 + static_cast<std::uint64_t>(h * 10 + d));
        if (!check_conditions(q, n, h, d).pass()) {
          CHECK_THROWS_AS(reconstruct_ball(sphere_of(f), h), ConditionFailureError);
          continue;
        }
        CHECK(ball_error(reconstruct_ball(sphere_of(f), h), f) <= 1e-8);
        const auto zero = reconstruct_ball(SphereData(params, d), h);
        for (const auto& v : zero.values()) CHECK(v == Complex(0.0));
      }
    }
  }
}

TEST_CASE("reconstruction is linear") {
  const SchemeParams params{4, 4};
  const int h = 2;
  REQUIRE(check_conditions(4, 4, h, h).pass());
  const auto f = random_eigenfunction(params, h, 1);
  const auto g = random_eigenfunction(params, h, 2);
  const Complex a{0.3, -1.2}, b{2.0, 0.5};
  auto combo = f;
  combo *= a;
  auto gb = g;
  gb *= b;
  combo += gb;
  const auto rf = reconstruct_full(SphereData::restrict_to(f, h), h);
  const auto rg = reconstruct_full(SphereData::restrict_to(g, h), h);
  const auto rc = reconstruct_full(SphereData::restrict_to(combo, h), h);
  for (std::size_t r = 0; r < rc.size(); ++r) CHECK(std::abs(rc[r] - (a * rf[r] + b * rg[r])) <= 1e-9);
}

TEST_CASE("full round trip") {
  for (auto [q, n] : {std::pair{3, 3}, {3, 4}, {4, 3}, {5, 3}, {3, 5}}) {
    const SchemeParams params{q, n};
    for (int h = 0; h <= n; ++h) {
      const auto f = random_eigenfunction(params, h, 500 + static_cast<std::uint64_t>(h));
      const auto sphere = SphereData::restrict_to(f, h);
      if (!check_conditions(q, n, h, h).pass()) {
        CHECK_THROWS_AS(reconstruct_full(sphere, h), ConditionFailureError);
        continue;
      }
      for (EtaMethod method : {EtaMethod::closed_form, EtaMethod::transfer}) {
        ReconOptions options;
        options.eta = method;
        const auto got = reconstruct_full(sphere, h, options);
        CHECK(max_gap(got.values(), f.values()) <= 1e-8 * f.max_modulus());
        CHECK(eigen_residual(got, h) <= 1e-9 * (1 + got.max_modulus()));
        CHECK(got.eigenindex() == h);
      }
    }
  }
}

TEST_CASE("characters are recovered") {
  const SchemeParams params{3, 4};
  const int h = 2;
  REQUIRE(check_conditions(3, 4, h, h).pass());
  for (const Word& beta : sphere(params, Word::zero(4), h)) {
    const auto chi = character(params, beta);
    const auto got = reconstruct_full(SphereData::restrict_to(chi, h), h);
    CHECK(max_gap(got.values(), chi.values()) <= 1e-9);
  }
}

TEST_CASE("eta closed form matches the orthogonal face sum") {
  const SchemeParams params{3, 4};
  const int h = 2;
  std::mt19937_64 rng(12);
  const auto faces = subsets_of_size(4, h);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_eigenfunction(params, h, static_cast<std::uint64_t>(trial));
    const auto ball = BallData::restrict_to(f, h);
    const IndexSet& I = faces[rng() % faces.size()];
    const auto members = face(params, I, Word::zero(4));
    const Word& beta = members[rng() % members.size()];
    const Complex direct = oracle::eta_direct(f, I, beta);
    CHECK(std::abs(eta_sum(I, beta, ball, h) - direct) <= 1e-9);
    CHECK(std::abs(eta_sum(I, beta, ball, h, EtaMethod::transfer) - direct) <= 1e-9);
  }
  const auto ball = BallData::restrict_to(random_eigenfunction(params, h, 1), h);
  CHECK_THROWS_AS(eta_sum(IndexSet(4, {1, 2}), Word::parse("0010", params), ball, h), ParameterError);
}

TEST_CASE("inconsistent data is reported") {
  // W_3 has 80 words, V_5 has dimension 32.
  const SchemeParams params{3, 5};
  const int h = 5, d = 3;
  REQUIRE(check_conditions(3, 5, h, d).pass());
  auto f = random_eigenfunction(params, h, 3);
  auto data = SphereData::restrict_to(f, d);
  CHECK_NOTHROW(reconstruct_ball(data, h));
  const Word w = Word::parse("11100", params);
  data.set(w, data.at(w) + 0.5);
  CHECK_THROWS_AS(reconstruct_ball(data, h), InconsistentDataError);
  ReconOptions lax;
  lax.check_consistency = false;
  CHECK_NOTHROW(reconstruct_ball(data, h, lax));
}

TEST_CASE("any data is consistent when restriction is onto") {
  // W_1 has 8 words, V_2 has dimension 24.
  const SchemeParams params{3, 4};
  SphereData data(params, 1);
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (const Word& w : sphere(params, Word::zero(4), 1)) data.set(w, {g(rng), g(rng)});
  const auto ball = reconstruct_ball(data, 2);
  CHECK(ball.at(Word::parse("0100", params)) == data.at(Word::parse("0100", params)));
}
