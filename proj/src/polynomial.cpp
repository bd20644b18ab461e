#include "hamrecon/polynomial.hpp"

#include <stdexcept>

namespace hamrecon {

HomogeneousPoly HomogeneousPoly::linear_power(Complex x_coef, Complex y_coef, int exponent) {
  if (exponent < 0) throw std::invalid_argument("linear_power: negative exponent");
  HomogeneousPoly out;
  const HomogeneousPoly factor({x_coef, y_coef});
  for (int e = 0; e < exponent; ++e) out = out * factor;
  return out;
}

HomogeneousPoly::Complex HomogeneousPoly::operator()(Complex x, Complex y) const {
  Complex sum = 0.0;
  const int d = degree();
  for (int j = 0; j <= d; ++j) sum += coef_[static_cast<std::size_t>(j)] * std::pow(y, j) * std::pow(x, d - j);
  return sum;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  std::vector<HomogeneousPoly::Complex> out(a.coef_.size() + b.coef_.size() - 1);
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    for (std::size_t j = 0; j < b.coef_.size(); ++j) out[i + j] += a.coef_[i] * b.coef_[j];
  }
  return HomogeneousPoly(std::move(out));
}

}  // namespace hamrecon
