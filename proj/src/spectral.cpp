#include "hamrecon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hamrecon/krawtchouk.hpp"

namespace hamrecon {

FourierContext::FourierContext(int q) : q_(q) {
  if (q < 1) throw ParameterError("FourierContext: q must be positive");
  powers_.resize(static_cast<std::size_t>(q));
  for (int m = 0; m < q; ++m) powers_[static_cast<std::size_t>(m)] = std::polar(1.0, 2.0 * std::numbers::pi * m / q);
}

Complex FourierContext::power(long e) const {
  long r = e % q_;
  if (r < 0) r += q_;
  return powers_[static_cast<std::size_t>(r)];
}

VertexFunction::VertexFunction(const SchemeParams& params, std::optional<int> eigenindex)
    : params_(params), eigenindex_(eigenindex) {
  params_.validate();
  values_.assign(params_.size(), Complex{});
}

VertexFunction::VertexFunction(const SchemeParams& params, std::vector<Complex> values, std::optional<int> eigenindex)
    : params_(params), values_(std::move(values)), eigenindex_(eigenindex) {
  params_.validate();
  if (values_.size() != params_.size()) throw ParameterError("VertexFunction: expected q^n values");
}

Complex VertexFunction::at(const Word& w) const {
  w.validate(params_);
  return values_[w.rank(params_.q)];
}

void VertexFunction::set(const Word& w, Complex value) {
  w.validate(params_);
  values_[w.rank(params_.q)] = value;
}

double VertexFunction::max_modulus() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

VertexFunction& VertexFunction::operator+=(const VertexFunction& other) {
  if (!(other.params_ == params_)) throw ParameterError("VertexFunction: parameter mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  if (eigenindex_ != other.eigenindex_) eigenindex_.reset();
  return *this;
}

VertexFunction& VertexFunction::operator*=(Complex scale) {
  for (Complex& v : values_) v *= scale;
  return *this;
}

VertexFunction character(const SchemeParams& params, const Word& beta) {
  beta.validate(params);
  const FourierContext ctx(params.q);
  VertexFunction out(params, weight(beta));
  const Cube cube(params);
  for (std::uint32_t r = 0; r < cube.size(); ++r) {
    auto g = cube.digits(r);
    long dot = 0;
    for (std::size_t p = 0; p < g.size(); ++p) dot += static_cast<long>(beta[p]) * g[p];
    out[r] = ctx.power(dot);
  }
  return out;
}

VertexFunction fourier_transform(const VertexFunction& f) {
  VertexFunction out = f;
  out.set_eigenindex(std::nullopt);
  kernels::parallel::fourier(out.values(), f.params().q, f.params().n, Direction::forward);
  return out;
}

VertexFunction inverse_fourier(const VertexFunction& g) {
  VertexFunction out = g;
  out.set_eigenindex(std::nullopt);
  kernels::parallel::fourier(out.values(), g.params().q, g.params().n, Direction::inverse);
  out *= 1.0 / static_cast<double>(g.size());
  return out;
}

VertexFunction apply_distance_operator(const VertexFunction& f, int i) {
  const SchemeParams& params = f.params();
  if (i < 0 || i > params.n) throw ParameterError("apply_distance_operator: i outside [0, n]");
  const Cube cube(params);
  const auto offsets = cube.weight_class(i);
  VertexFunction out(params, f.eigenindex());
  kernels::parallel::distance_sum(cube, f.values(), out.values(), offsets);
  return out;
}

VertexFunction project_eigenspace(const VertexFunction& f, int h, ProjectionMethod method) {
  const SchemeParams& params = f.params();
  if (h < 0 || h > params.n) throw ParameterError("project_eigenspace: h outside [0, n]");
  if (method == ProjectionMethod::fourier) {
    VertexFunction spectrum = fourier_transform(f);
    const Cube cube(params);
    for (std::uint32_t r = 0; r < cube.size(); ++r) {
      if (cube.weight(r) != h) spectrum[r] = 0.0;
    }
    VertexFunction out = inverse_fourier(spectrum);
    out.set_eigenindex(h);
    return out;
  }
  VertexFunction out(params, h);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (int i = 0; i <= params.n; ++i) {
    const double weight_i = krawtchouk_value(params.q, h, i, params.n).get_d() * scale;
    if (weight_i == 0.0) continue;
    const VertexFunction term = apply_distance_operator(f, i);
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += weight_i * term[r];
  }
  return out;
}

VertexFunction random_eigenfunction(const SchemeParams& params, int h, std::uint64_t seed) {
  params.validate();
  if (h < 0 || h > params.n) throw ParameterError("random_eigenfunction: h outside [0, n]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    VertexFunction raw(params);
    for (Complex& v : raw.values()) {
      const double re = uniform(rng);
      const double im = uniform(rng);
      v = {re, im};
    }
    VertexFunction f = project_eigenspace(raw, h, ProjectionMethod::fourier);
    const double peak = f.max_modulus();
    if (peak > 1e-6) {
      f *= 1.0 / peak;
      f.set_eigenindex(h);
      return f;
    }
  }
  throw std::runtime_error("random_eigenfunction: projection onto V_h stayed numerically zero");
}

double eigen_residual(const VertexFunction& f, int h) {
  const SchemeParams& params = f.params();
  const long lambda = eigenvalue_of_index(params.q, params.n, h).lambda;
  const VertexFunction neighbours = apply_distance_operator(f, 1);
  double worst = 0.0;
  for (std::size_t r = 0; r < f.size(); ++r) {
    worst = std::max(worst, std::abs(neighbours[r] - static_cast<double>(lambda) * f[r]));
  }
  return worst;
}

bool is_eigenfunction(const VertexFunction& f, int h, double tol) {
  return eigen_residual(f, h) <= tol * (1.0 + f.max_modulus());
}

}  // namespace hamrecon
