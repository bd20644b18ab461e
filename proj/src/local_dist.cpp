#include "hamrecon/local_dist.hpp"

#include <algorithm>
#include <cmath>

#include "hamrecon/coeffs.hpp"

namespace hamrecon {
namespace {

void check_values(const SchemeParams& params, std::span<const Complex> values) {
  if (values.size() != params.size()) throw ParameterError("value array does not cover q^n vertices");
}

double max_gap(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  const int top = std::max(a.degree(), b.degree());
  double worst = 0.0;
  for (int j = 0; j <= top; ++j) {
    const Complex ca = j <= a.degree() ? a[j] : Complex{};
    const Complex cb = j <= b.degree() ? b[j] : Complex{};
    worst = std::max(worst, std::abs(ca - cb));
  }
  return worst;
}

}  // namespace

LocalDistribution local_distribution(const SchemeParams& params, std::span<const Complex> values,
                                     const IndexSet& face_positions, const Word& anchor) {
  check_values(params, values);
  LocalDistribution dist{face_positions, anchor, std::vector<Complex>(face_positions.size() + 1)};
  for (const Word& w : face(params, face_positions, anchor)) {
    dist.components[static_cast<std::size_t>(hamming_distance(w, anchor))] += values[w.rank(params.q)];
  }
  return dist;
}

LocalDistribution local_distribution(const VertexFunction& f, const IndexSet& face_positions, const Word& anchor) {
  return local_distribution(f.params(), f.values(), face_positions, anchor);
}

HomogeneousPoly enumerator(const LocalDistribution& dist) { return HomogeneousPoly(dist.components); }

Complex enumerator_eval(const LocalDistribution& dist, Complex x, Complex y) { return enumerator(dist)(x, y); }

std::vector<Complex> substituted_coefficients(const LocalDistribution& dist, int q) {
  const int k = dist.dimension();
  std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
  for (int l = 0; l <= k; ++l) {
    Complex acc = 0.0;
    for (int i = 0; i <= l; ++i) {
      const double scale = std::pow(static_cast<double>(q - 2), l - i) * binomial(k - i, l - i).get_d();
      const Complex term = dist.components[static_cast<std::size_t>(i)] * scale;
      acc += (i % 2) ? -term : term;
    }
    out[static_cast<std::size_t>(l)] = acc;
  }
  return out;
}

LocalDistribution transfer_orthogonal(const LocalDistribution& dist, const SchemeParams& params, int h) {
  const int n = params.n;
  const int k = dist.dimension();
  if (!regime_of(n, h, k)) {
    throw ParameterError("transfer_orthogonal: no formula for face dimension " + std::to_string(k) +
                         " at eigenvalue index " + std::to_string(h));
  }
  const CoefficientTable table(params.q, n, h, k);
  LocalDistribution out{dist.face.complement(), dist.anchor, std::vector<Complex>(static_cast<std::size_t>(n - k) + 1)};
  for (int j = 0; j <= n - k; ++j) {
    Complex acc = 0.0;
    for (int i = 0; i <= std::min(j, k); ++i) acc += table.at(i, j).get_d() * dist.components[static_cast<std::size_t>(i)];
    out.components[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

double verify_face_relation(const VertexFunction& f, const IndexSet& face_positions, const Word& anchor, int h) {
  const SchemeParams& params = f.params();
  const int n = params.n;
  const int k = static_cast<int>(face_positions.size());
  if (h < 0 || h > n) throw ParameterError("verify_face_relation: h outside [0, n]");
  const double q = params.q;

  const HomogeneousPoly g_here(substituted_coefficients(local_distribution(f, face_positions, anchor), params.q));
  const HomogeneousPoly g_other = enumerator(local_distribution(f, face_positions.complement(), anchor));

  // (x + (q-1)y)^a g_other(x, y) = (x - y)^b g_here(x', y'), with a = h - (n-k), b = h - k.
  const int a = h - (n - k);
  const int b = h - k;
  const auto full = [&](int e) { return HomogeneousPoly::linear_power(1.0, q - 1.0, e); };
  const auto diff = [&](int e) { return HomogeneousPoly::linear_power(1.0, -1.0, e); };
  const HomogeneousPoly lhs = full(std::max(a, 0)) * diff(std::max(-b, 0)) * g_other;
  const HomogeneousPoly rhs = diff(std::max(b, 0)) * full(std::max(-a, 0)) * g_here;
  return max_gap(lhs, rhs);
}

SigmaDelta sigma_delta_split(const SchemeParams& params, std::span<const Complex> values, const Word& alpha) {
  check_values(params, values);
  alpha.validate(params);
  const auto [k, support] = weight_support(alpha);
  if (k == 0) throw ParameterError("sigma_delta_split: undefined at the zero word");
  SigmaDelta out{std::vector<Complex>(static_cast<std::size_t>(k) + 1), std::vector<Complex>(static_cast<std::size_t>(k) + 1)};
  for (const Word& w : face(params, support, alpha)) {
    const auto i = static_cast<std::size_t>(hamming_distance(w, alpha));
    const Complex v = values[w.rank(params.q)];
    if (weight(w) == k) out.sigma[i] += v;
    else out.delta[i] += v;
  }
  return out;
}

SigmaDelta sigma_delta_split(const VertexFunction& f, const Word& alpha) {
  return sigma_delta_split(f.params(), f.values(), alpha);
}

}  // namespace hamrecon
