#include <doctest.h>

#include <random>

#include "hamrecon/kernels.hpp"

using namespace hamrecon;

namespace {

std::vector<Complex> random_vector(std::size_t size, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Complex> v(size);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

double max_gap(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("factored transform matches the direct transform") {
  for (auto [a, dims] : {std::pair{2, 5}, {3, 4}, {4, 3}, {5, 3}}) {
    std::size_t size = 1;
    for (int p = 0; p < dims; ++p) size *= static_cast<std::size_t>(a);
    for (Direction dir : {Direction::forward, Direction::inverse}) {
      const auto input = random_vector(size, 9);
      std::vector<Complex> naive(size);
      kernels::serial::fourier_naive(input, naive, a, dims, dir);
      auto fast = input;
      kernels::serial::fourier(fast, a, dims, dir);
      CHECK(max_gap(fast, naive) < 1e-9 * static_cast<double>(size));
    }
  }
}

TEST_CASE("parallel kernels agree bitwise with the serial reference") {
  const SchemeParams params{4, 5};
  const Cube cube(params);
  const auto input = random_vector(cube.size(), 4);

  auto s = input, p = input;
  kernels::serial::fourier(s, 4, 5, Direction::forward);
  kernels::parallel::fourier(p, 4, 5, Direction::forward);
  CHECK(s == p);

  for (int r = 0; r <= 5; ++r) {
    const auto offsets = cube.weight_class(r);
    std::vector<Complex> so(cube.size()), po(cube.size());
    kernels::serial::distance_sum(cube, input, so, offsets);
    kernels::parallel::distance_sum(cube, input, po, offsets);
    CHECK(so == po);
  }

  std::vector<std::uint32_t> members;
  for (std::uint32_t r = 0; r < cube.size(); ++r) {
    if ((cube.support_mask(r) & ~0b01101u) == 0) members.push_back(r);
  }
  CHECK(kernels::serial::face_profiles(cube, input, members, 3) ==
        kernels::parallel::face_profiles(cube, input, members, 3));
}

TEST_CASE("distance sum of the constant function counts the sphere") {
  const SchemeParams params{3, 4};
  const Cube cube(params);
  const std::vector<Complex> ones(cube.size(), 1.0);
  std::vector<Complex> out(cube.size());
  kernels::serial::distance_sum(cube, ones, out, cube.weight_class(2));
  for (const auto& v : out) CHECK(v == Complex(24.0));  // C(4,2) * 2^2
}

TEST_CASE("size mismatches are rejected") {
  std::vector<Complex> v(10);
  CHECK_THROWS_AS(kernels::serial::fourier(v, 3, 2, Direction::forward), ParameterError);
}
