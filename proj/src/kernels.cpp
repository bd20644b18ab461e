#include "hamrecon/kernels.hpp"

#include <numbers>

#include "hamrecon/errors.hpp"

namespace hamrecon::kernels {
namespace {

std::vector<Complex> twiddles(int alphabet, Direction dir) {
  const double sign = dir == Direction::forward ? -1.0 : 1.0;
  std::vector<Complex> w(static_cast<std::size_t>(alphabet));
  for (int m = 0; m < alphabet; ++m) {
    w[static_cast<std::size_t>(m)] = std::polar(1.0, sign * 2.0 * std::numbers::pi * m / alphabet);
  }
  return w;
}

std::size_t checked_size(std::size_t size, int alphabet, int dims) {
  std::size_t expected = 1;
  for (int p = 0; p < dims; ++p) expected *= static_cast<std::size_t>(alphabet);
  if (size != expected) throw ParameterError("transform length does not match alphabet^dims");
  return expected;
}

template <bool Parallel>
void fourier_impl(std::span<Complex> data, int alphabet, int dims, Direction dir) {
  const std::size_t total = checked_size(data.size(), alphabet, dims);
  if (alphabet < 1 || alphabet > 256) throw ParameterError("fourier: alphabet outside [1, 256]");
  const auto w = twiddles(alphabet, dir);
  const auto a = static_cast<std::size_t>(alphabet);
  std::size_t stride = total;
  for (int axis = 0; axis < dims; ++axis) {
    stride /= a;
    const std::size_t lines = total / a;
    const auto line_count = static_cast<long>(lines);
#pragma omp parallel for if (Parallel) schedule(static)
    for (long line = 0; line < line_count; ++line) {
      const auto l = static_cast<std::size_t>(line);
      const std::size_t base = (l / stride) * stride * a + l % stride;
      Complex in[256];
      for (std::size_t m = 0; m < a; ++m) in[m] = data[base + m * stride];
      for (std::size_t u = 0; u < a; ++u) {
        Complex acc = 0.0;
        for (std::size_t m = 0; m < a; ++m) acc += in[m] * w[(u * m) % a];
        data[base + u * stride] = acc;
      }
    }
  }
}

template <bool Parallel>
void distance_sum_impl(const Cube& cube, std::span<const Complex> in, std::span<Complex> out,
                       std::span<const std::uint32_t> offsets) {
  if (in.size() != cube.size() || out.size() != cube.size()) throw ParameterError("distance_sum: size mismatch");
  const auto count = static_cast<long>(cube.size());
#pragma omp parallel for if (Parallel) schedule(static)
  for (long a = 0; a < count; ++a) {
    Complex acc = 0.0;
    for (std::uint32_t d : offsets) acc += in[cube.add(static_cast<std::uint32_t>(a), d)];
    out[static_cast<std::size_t>(a)] = acc;
  }
}

template <bool Parallel>
std::vector<Complex> face_profiles_impl(const Cube& cube, std::span<const Complex> values,
                                        std::span<const std::uint32_t> members, int face_dim) {
  if (values.size() != cube.size()) throw ParameterError("face_profiles: size mismatch");
  const auto width = static_cast<std::size_t>(face_dim) + 1;
  std::vector<Complex> out(members.size() * width);
  const auto count = static_cast<long>(members.size());
#pragma omp parallel for if (Parallel) schedule(static)
  for (long b = 0; b < count; ++b) {
    const std::uint32_t anchor = members[static_cast<std::size_t>(b)];
    Complex* row = out.data() + static_cast<std::size_t>(b) * width;
    for (std::uint32_t other : members) row[cube.distance(anchor, other)] += values[other];
  }
  return out;
}

}  // namespace

namespace serial {

void fourier(std::span<Complex> data, int alphabet, int dims, Direction dir) {
  fourier_impl<false>(data, alphabet, dims, dir);
}

void distance_sum(const Cube& cube, std::span<const Complex> in, std::span<Complex> out,
                  std::span<const std::uint32_t> offsets) {
  distance_sum_impl<false>(cube, in, out, offsets);
}

std::vector<Complex> face_profiles(const Cube& cube, std::span<const Complex> values,
                                   std::span<const std::uint32_t> members, int face_dim) {
  return face_profiles_impl<false>(cube, values, members, face_dim);
}

void fourier_naive(std::span<const Complex> in, std::span<Complex> out, int alphabet, int dims, Direction dir) {
  const std::size_t total = checked_size(in.size(), alphabet, dims);
  if (out.size() != total) throw ParameterError("fourier_naive: output size mismatch");
  const auto w = twiddles(alphabet, dir);
  const auto a = static_cast<std::size_t>(alphabet);
  for (std::size_t u = 0; u < total; ++u) {
    Complex acc = 0.0;
    for (std::size_t v = 0; v < total; ++v) {
      std::size_t x = u, y = v, dot = 0;
      for (int p = 0; p < dims; ++p) {
        dot += (x % a) * (y % a);
        x /= a;
        y /= a;
      }
      acc += in[v] * w[dot % a];
    }
    out[u] = acc;
  }
}

}  // namespace serial

namespace parallel {

void fourier(std::span<Complex> data, int alphabet, int dims, Direction dir) {
  fourier_impl<true>(data, alphabet, dims, dir);
}

void distance_sum(const Cube& cube, std::span<const Complex> in, std::span<Complex> out,
                  std::span<const std::uint32_t> offsets) {
  distance_sum_impl<true>(cube, in, out, offsets);
}

std::vector<Complex> face_profiles(const Cube& cube, std::span<const Complex> values,
                                   std::span<const std::uint32_t> members, int face_dim) {
  return face_profiles_impl<true>(cube, values, members, face_dim);
}

}  // namespace parallel

}  // namespace hamrecon::kernels
