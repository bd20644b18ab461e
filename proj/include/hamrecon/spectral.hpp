#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hamrecon/kernels.hpp"
#include "hamrecon/scheme.hpp"

namespace hamrecon {

/// Primitive q-th root of unity xi = exp(2 pi i / q) with a table of its powers.
class FourierContext {
 public:
  explicit FourierContext(int q);

  int q() const { return q_; }
  Complex xi() const { return powers_[1 % q_]; }
  /// xi^e for any integer e.
  Complex power(long e) const;

 private:
  int q_;
  std::vector<Complex> powers_;
};

/// Dense complex function on all q^n vertices, indexed by word rank.
class VertexFunction {
 public:
  VertexFunction() = default;
  explicit VertexFunction(const SchemeParams& params, std::optional<int> eigenindex = std::nullopt);
  VertexFunction(const SchemeParams& params, std::vector<Complex> values, std::optional<int> eigenindex = std::nullopt);

  const SchemeParams& params() const { return params_; }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }
  std::size_t size() const { return values_.size(); }

  Complex& operator[](std::size_t rank) { return values_[rank]; }
  const Complex& operator[](std::size_t rank) const { return values_[rank]; }
  Complex at(const Word& w) const;
  void set(const Word& w, Complex value);

  std::optional<int> eigenindex() const { return eigenindex_; }
  void set_eigenindex(std::optional<int> h) { eigenindex_ = h; }

  double max_modulus() const;

  VertexFunction& operator+=(const VertexFunction& other);
  VertexFunction& operator*=(Complex scale);

 private:
  SchemeParams params_;
  std::vector<Complex> values_;
  std::optional<int> eigenindex_;
};

/// chi_beta(gamma) = xi^<beta, gamma>; lies in V_h with h = wt(beta).
VertexFunction character(const SchemeParams& params, const Word& beta);

/// f_hat(a) = sum_b f(b) conj(xi^<a,b>).
VertexFunction fourier_transform(const VertexFunction& f);
/// f(c) = q^-n sum_a g(a) xi^<a,c>.
VertexFunction inverse_fourier(const VertexFunction& g);

/// (D_i f)(a) = sum of f over the sphere of radius i around a.
VertexFunction apply_distance_operator(const VertexFunction& f, int i);

enum class ProjectionMethod {
  fourier,            ///< zero the transform off weight h and invert
  distance_operators  ///< J_h = q^-n sum_i P_h(i; n) D_i
};

VertexFunction project_eigenspace(const VertexFunction& f, int h,
                                  ProjectionMethod method = ProjectionMethod::fourier);

/// Seeded projection of a random complex vector onto V_h, scaled to max modulus 1.
VertexFunction random_eigenfunction(const SchemeParams& params, int h, std::uint64_t seed);

/// max_a |sum_{b in W_1(a)} f(b) - lambda_h f(a)|.
double eigen_residual(const VertexFunction& f, int h);

/// Default acceptance bound for eigen_residual: tol * (1 + max|f|).
bool is_eigenfunction(const VertexFunction& f, int h, double tol = 1e-9);

}  // namespace hamrecon
