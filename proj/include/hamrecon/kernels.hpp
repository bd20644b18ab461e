#pragma once

// Hot loops over all q^n vertices. Each kernel has an OpenMP-parallel version and a serial
// reference with identical per-element arithmetic, so the two agree bitwise.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hamrecon/scheme.hpp"

namespace hamrecon {

using Complex = std::complex<double>;

enum class Direction {
  forward,  ///< sum_b f(b) conj(xi^<a,b>)
  inverse   ///< sum_a g(a) xi^<a,b>, unnormalized
};

namespace kernels {

namespace serial {

/// In-place transform over Z_alphabet^dims, one size-`alphabet` DFT per axis. data.size() == alphabet^dims.
void fourier(std::span<Complex> data, int alphabet, int dims, Direction dir);

/// out[a] = sum over offsets d of in[a + d].
void distance_sum(const Cube& cube, std::span<const Complex> in, std::span<Complex> out,
                  std::span<const std::uint32_t> offsets);

/// For every anchor b in `members` (the ranks of one face of dimension face_dim), the local
/// distribution of `values` in that face around b: row-major [members.size()][|mask|+1].
std::vector<Complex> face_profiles(const Cube& cube, std::span<const Complex> values,
                                   std::span<const std::uint32_t> members, int face_dim);

/// Direct O(N^2) transform; test oracle for `fourier`.
void fourier_naive(std::span<const Complex> in, std::span<Complex> out, int alphabet, int dims, Direction dir);

}  // namespace serial

namespace parallel {

void fourier(std::span<Complex> data, int alphabet, int dims, Direction dir);
void distance_sum(const Cube& cube, std::span<const Complex> in, std::span<Complex> out,
                  std::span<const std::uint32_t> offsets);
std::vector<Complex> face_profiles(const Cube& cube, std::span<const Complex> values,
                                   std::span<const std::uint32_t> members, int face_dim);

}  // namespace parallel

}  // namespace kernels
}  // namespace hamrecon
