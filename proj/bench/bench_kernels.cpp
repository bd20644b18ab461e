// Serial reference kernels against their OpenMP versions, plus the end-to-end reconstructions.

#include <benchmark/benchmark.h>

#include "hamrecon/kernels.hpp"
#include "hamrecon/recon.hpp"

using namespace hamrecon;

namespace {

VertexFunction sample(int q, int n) { return random_eigenfunction({q, n}, n / 2, 11); }

template <bool Parallel>
void BM_Fourier(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  VertexFunction f = sample(q, n);
  std::vector<Complex> work(f.values().begin(), f.values().end());
  for (auto _ : state) {
    if constexpr (Parallel) kernels::parallel::fourier(work, q, n, Direction::forward);
    else kernels::serial::fourier(work, q, n, Direction::forward);
    benchmark::DoNotOptimize(work.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(work.size()));
}

template <bool Parallel>
void BM_DistanceSum(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Cube cube({q, n});
  VertexFunction f = sample(q, n);
  const auto offsets = cube.weight_class(2);
  std::vector<Complex> out(f.size());
  for (auto _ : state) {
    if constexpr (Parallel) kernels::parallel::distance_sum(cube, f.values(), out, offsets);
    else kernels::serial::distance_sum(cube, f.values(), out, offsets);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_FaceProfiles(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Cube cube({q, n});
  VertexFunction f = sample(q, n);
  std::vector<std::uint32_t> members;
  for (std::uint32_t r = 0; r < cube.size(); ++r) members.push_back(r);
  for (auto _ : state) {
    auto out = Parallel ? kernels::parallel::face_profiles(cube, f.values(), members, n)
                        : kernels::serial::face_profiles(cube, f.values(), members, n);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_ReconstructFull(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int h = static_cast<int>(state.range(2));
  const VertexFunction f = random_eigenfunction({q, n}, h, 3);
  const SphereData sphere = SphereData::restrict_to(f, h);
  for (auto _ : state) {
    auto g = reconstruct_full(sphere, h);
    benchmark::DoNotOptimize(g.values().data());
  }
}

}  // namespace

BENCHMARK(BM_Fourier<false>)->Args({3, 6})->Args({4, 6})->Args({5, 5});
BENCHMARK(BM_Fourier<true>)->Args({3, 6})->Args({4, 6})->Args({5, 5});
BENCHMARK(BM_DistanceSum<false>)->Args({3, 6})->Args({4, 6});
BENCHMARK(BM_DistanceSum<true>)->Args({3, 6})->Args({4, 6});
BENCHMARK(BM_FaceProfiles<false>)->Args({3, 6})->Args({4, 5});
BENCHMARK(BM_FaceProfiles<true>)->Args({3, 6})->Args({4, 5});
BENCHMARK(BM_ReconstructFull)->Args({3, 6, 3})->Args({4, 6, 2})->Args({5, 5, 2});

BENCHMARK_MAIN();
