#pragma once

#include <complex>
#include <vector>

namespace hamrecon {

/// Homogeneous polynomial in (x, y): coefficient j multiplies y^j x^(degree - j).
class HomogeneousPoly {
 public:
  using Complex = std::complex<double>;

  HomogeneousPoly() : coef_{1.0} {}
  explicit HomogeneousPoly(std::vector<Complex> coefficients) : coef_(std::move(coefficients)) {}

  /// (x_coef * x + y_coef * y)^exponent
  static HomogeneousPoly linear_power(Complex x_coef, Complex y_coef, int exponent);

  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  const std::vector<Complex>& coefficients() const { return coef_; }
  Complex operator[](int j) const { return coef_[static_cast<std::size_t>(j)]; }

  Complex operator()(Complex x, Complex y) const;

  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);

 private:
  std::vector<Complex> coef_;
};

}  // namespace hamrecon
