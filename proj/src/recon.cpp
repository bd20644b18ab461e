#include "hamrecon/recon.hpp"

#include <algorithm>
#include <cmath>

#include "hamrecon/krawtchouk.hpp"
#include "hamrecon/local_dist.hpp"

namespace hamrecon {
namespace {

std::string failure_message(const ConditionReport& report) {
  std::string msg = "reconstruction conditions fail for q=" + std::to_string(report.q) + " n=" + std::to_string(report.n) +
                    " h=" + std::to_string(report.h) + " d=" + std::to_string(report.d);
  if (!report.origin_ok) msg += ": P_d(h;n) = 0";
  for (const auto& f : report.failures) msg += "; layer k=" + std::to_string(f.k) + " l=" + std::to_string(f.l);
  return msg;
}

double scale_of(std::span<const Complex> values) {
  double m = 0.0;
  for (const Complex& v : values) m = std::max(m, std::abs(v));
  return 1.0 + m;
}

// Ranks of all words supported within `mask`, ascending.
std::vector<std::uint32_t> supported_within(const Cube& cube, std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < cube.size(); ++r) {
    if ((cube.support_mask(r) & ~mask) == 0) out.push_back(r);
  }
  return out;
}

std::vector<double> layer_weights(const CoefficientTable& table, int d) {
  const int k = table.k();
  std::vector<double> w(static_cast<std::size_t>(std::min(k, d - k)) + 1);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = table.at(static_cast<int>(i), d - k).get_d();
  return w;
}

// Layer right-hand side with the coefficients and cube already prepared.
std::vector<Complex> layer_rhs_impl(const Cube& cube, std::uint32_t support, std::span<const Complex> sphere,
                                    std::span<const Complex> partial, std::span<const double> weights, int k, int d) {
  const std::uint32_t all = (cube.params().n == 32) ? ~0u : ((1u << cube.params().n) - 1u);
  const std::uint32_t other = all & ~support;
  std::vector<std::uint32_t> orthogonal_steps;
  for (std::uint32_t r : supported_within(cube, other)) {
    if (cube.weight(r) == d - k) orthogonal_steps.push_back(r);
  }
  std::vector<std::uint32_t> lighter;
  for (std::uint32_t r : supported_within(cube, support)) {
    if (cube.weight(r) < k) lighter.push_back(r);
  }
  std::vector<std::uint32_t> members;
  for (std::uint32_t r : supported_within(cube, support)) {
    if (cube.support_mask(r) == support) members.push_back(r);
  }
  std::vector<Complex> rhs(members.size());
  for (std::size_t m = 0; m < members.size(); ++m) {
    const std::uint32_t alpha = members[m];
    Complex phi = 0.0;
    for (std::uint32_t step : orthogonal_steps) phi += sphere[cube.add(alpha, step)];
    Complex psi = 0.0;
    for (std::uint32_t beta : lighter) {
      const auto i = static_cast<std::size_t>(cube.distance(alpha, beta));
      if (i < weights.size()) psi += weights[i] * partial[beta];
    }
    rhs[m] = phi - psi;
  }
  return rhs;
}

std::vector<Complex> solve_with(std::span<const Complex> rhs, int alphabet, int k, std::span<const double> eigen) {
  std::vector<Complex> work(rhs.begin(), rhs.end());
  kernels::serial::fourier(work, alphabet, k, Direction::forward);
  const auto a = static_cast<std::size_t>(alphabet);
  for (std::size_t u = 0; u < work.size(); ++u) {
    int l = 0;
    for (std::size_t x = u; x > 0; x /= a) l += (x % a) != 0;
    work[u] /= eigen[static_cast<std::size_t>(l)];
  }
  kernels::serial::fourier(work, alphabet, k, Direction::inverse);
  const double norm = 1.0 / static_cast<double>(work.size());
  for (Complex& v : work) v *= norm;
  return work;
}

std::vector<double> to_doubles(const EigenSums& sums) {
  std::vector<double> out;
  for (const Rational& s : sums.sums) out.push_back(s.get_d());
  return out;
}

// Distance from the data on W_d to the restrictions of V_h, by conjugate gradients on the
// normal equations over the weight-h Fourier coefficients. Returns 0 if the iteration stalls.
double restriction_residual(const Cube& cube, std::span<const Complex> given, int h, int d) {
  const SchemeParams& params = cube.params();
  const double root = std::sqrt(static_cast<double>(cube.size()));
  auto restrict_weight = [&](std::vector<Complex>& v, int w) {
    for (std::uint32_t r = 0; r < cube.size(); ++r) {
      if (cube.weight(r) != w) v[r] = 0.0;
    }
  };
  // R c = (unitary inverse transform of c)|W_d, R* its adjoint.
  auto apply = [&](const std::vector<Complex>& c) {
    std::vector<Complex> v = c;
    kernels::parallel::fourier(v, params.q, params.n, Direction::inverse);
    for (Complex& x : v) x /= root;
    restrict_weight(v, d);
    return v;
  };
  auto adjoint = [&](const std::vector<Complex>& psi) {
    std::vector<Complex> v = psi;
    kernels::parallel::fourier(v, params.q, params.n, Direction::forward);
    for (Complex& x : v) x /= root;
    restrict_weight(v, h);
    return v;
  };
  auto norm2 = [](const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& x : v) s += std::norm(x);
    return s;
  };

  std::vector<Complex> r(given.begin(), given.end());
  restrict_weight(r, d);
  const double data = std::sqrt(norm2(r));
  if (data == 0.0) return 0.0;
  std::vector<Complex> s = adjoint(r);
  std::vector<Complex> p = s;
  double gamma = norm2(s);
  bool converged = false;
  for (int it = 0; it < 500; ++it) {
    if (std::sqrt(gamma) <= 1e-14 * data) {
      converged = true;
      break;
    }
    const auto t = apply(p);
    const double step = gamma / norm2(t);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= step * t[i];
    s = adjoint(r);
    const double next = norm2(s);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = s[i] + (next / gamma) * p[i];
    gamma = next;
  }
  if (!converged) return 0.0;
  double worst = 0.0;
  for (const Complex& x : r) worst = std::max(worst, std::abs(x));
  return worst;
}

void require_conditions(const SchemeParams& params, int h, int d) {
  ConditionReport report = check_conditions(params.q, params.n, h, d);
  if (!report.pass()) throw ConditionFailureError(std::move(report));
}

}  // namespace

ConditionFailureError::ConditionFailureError(ConditionReport report)
    : std::runtime_error(failure_message(report)), report_(std::move(report)) {}

InconsistentDataError::InconsistentDataError(const std::string& what, double residual)
    : std::runtime_error(what), residual_(residual) {}

SphereData::SphereData(const SchemeParams& params, int radius) : params_(params), radius_(radius) {
  params_.validate();
  if (radius < 0 || radius > params.n) throw ParameterError("sphere radius outside [0, n]");
  values_.assign(params_.size(), Complex{});
}

SphereData SphereData::restrict_to(const VertexFunction& f, int radius) {
  SphereData out(f.params(), radius);
  const Cube cube(f.params());
  for (std::uint32_t r = 0; r < cube.size(); ++r) {
    if (cube.weight(r) == radius) out.values_[r] = f[r];
  }
  return out;
}

Complex SphereData::at(const Word& w) const {
  w.validate(params_);
  if (!contains(w)) throw ParameterError("word " + w.to_string() + " is not on the sphere");
  return values_[w.rank(params_.q)];
}

void SphereData::set(const Word& w, Complex value) {
  w.validate(params_);
  if (!contains(w)) throw ParameterError("word " + w.to_string() + " is not on the sphere");
  values_[w.rank(params_.q)] = value;
}

std::size_t SphereData::domain_size() const {
  return static_cast<std::size_t>(binomial(params_.n, radius_).get_ui() * power(params_.q - 1, static_cast<unsigned long>(radius_)).get_ui());
}

BallData::BallData(const SchemeParams& params, int radius) : params_(params), radius_(radius) {
  params_.validate();
  if (radius < 0 || radius > params.n) throw ParameterError("ball radius outside [0, n]");
  values_.assign(params_.size(), Complex{});
}

BallData BallData::restrict_to(const VertexFunction& f, int radius) {
  BallData out(f.params(), radius);
  const Cube cube(f.params());
  for (std::uint32_t r = 0; r < cube.size(); ++r) {
    if (cube.weight(r) <= radius) out.values_[r] = f[r];
  }
  return out;
}

Complex BallData::at(const Word& w) const {
  w.validate(params_);
  if (!contains(w)) throw ParameterError("word " + w.to_string() + " is outside the ball");
  return values_[w.rank(params_.q)];
}

void BallData::set(const Word& w, Complex value) {
  w.validate(params_);
  if (!contains(w)) throw ParameterError("word " + w.to_string() + " is outside the ball");
  values_[w.rank(params_.q)] = value;
}

VertexFunction BallData::to_function(std::optional<int> eigenindex) const {
  return VertexFunction(params_, values_, eigenindex);
}

Complex reconstruct_origin(const SphereData& sphere, int h) {
  const SchemeParams& params = sphere.params();
  const BigInt denom = krawtchouk_value(params.q, sphere.radius(), h, params.n);
  if (sgn(denom) == 0) {
    ConditionReport report;
    report.q = params.q;
    report.n = params.n;
    report.h = h;
    report.d = sphere.radius();
    report.origin_value = denom;
    throw ConditionFailureError(std::move(report));
  }
  Complex total = 0.0;
  for (const Complex& v : sphere.values()) total += v;
  return total / denom.get_d();
}

std::vector<Complex> layer_rhs(const IndexSet& support, const SphereData& sphere, const BallData& partial, int h) {
  const SchemeParams& params = sphere.params();
  const int k = static_cast<int>(support.size());
  const int d = sphere.radius();
  if (!(partial.params() == params)) throw ParameterError("layer_rhs: parameter mismatch");
  if (k < 1 || k > d || d > h) throw ParameterError("layer_rhs: need 1 <= |I| <= d <= h");
  if (partial.radius() < k - 1) throw ParameterError("layer_rhs: lower layers missing from the partial ball");
  const Cube cube(params);
  const CoefficientTable table(params.q, params.n, h, k);
  const auto weights = layer_weights(table, d);
  return layer_rhs_impl(cube, support.mask(), sphere.values(), partial.values(), weights, k, d);
}

std::vector<Complex> solve_layer(std::span<const Complex> rhs, const EigenSums& sums) {
  if (sums.has_zero()) {
    ConditionReport report = check_conditions(sums.q, sums.n, sums.h, sums.d);
    throw ConditionFailureError(std::move(report));
  }
  const int alphabet = sums.q - 1;
  std::size_t expected = 1;
  for (int p = 0; p < sums.k; ++p) expected *= static_cast<std::size_t>(alphabet);
  if (rhs.size() != expected) throw ParameterError("solve_layer: rhs length must be (q-1)^k");
  return solve_with(rhs, alphabet, sums.k, to_doubles(sums));
}

std::vector<Complex> solve_layer(const LayerSystem& system, const SchemeParams& params, int h, int d) {
  const int k = static_cast<int>(system.support.size());
  return solve_layer(system.rhs, eigen_sums(params.q, params.n, h, d, k));
}

BallData reconstruct_ball(const SphereData& sphere, int h, const ReconOptions& options) {
  const SchemeParams& params = sphere.params();
  const int d = sphere.radius();
  if (h < 0 || h > params.n) throw ParameterError("eigenvalue index h outside [0, n]");
  if (d > h) throw ParameterError("sphere radius d must not exceed h");
  require_conditions(params, h, d);

  const Cube cube(params);
  BallData ball(params, d);
  auto store = ball.values();
  const auto given = sphere.values();
  for (std::uint32_t r = 0; r < cube.size(); ++r) {
    if (cube.weight(r) == d) store[r] = given[r];
  }
  store[0] = reconstruct_origin(sphere, h);
  if (d == 0) return ball;

  for (int k = 1; k < d; ++k) {
    const CoefficientTable table(params.q, params.n, h, k);
    const auto weights = layer_weights(table, d);
    const auto eigen = to_doubles(eigen_sums(params.q, params.n, h, d, k));
    const auto supports = subsets_of_size(params.n, k);
    const auto count = static_cast<long>(supports.size());
#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < count; ++s) {
      const std::uint32_t mask = supports[static_cast<std::size_t>(s)].mask();
      const auto rhs = layer_rhs_impl(cube, mask, given, store, weights, k, d);
      const auto solution = solve_with(rhs, params.q - 1, k, eigen);
      std::size_t m = 0;
      for (std::uint32_t r : supported_within(cube, mask)) {
        if (cube.support_mask(r) == mask) store[r] = solution[m++];
      }
    }
  }

  if (options.check_consistency && d < h) {
    const double residual = restriction_residual(cube, given, h, d);
    if (residual > options.tolerance * scale_of(given)) {
      throw InconsistentDataError("sphere data is not the restriction of an eigenfunction with h = " + std::to_string(h) +
                                      " (least-squares residual " + std::to_string(residual) + ")",
                                  residual);
    }
  }
  return ball;
}

Complex eta_sum(const IndexSet& face_positions, const Word& beta, const BallData& ball, int h, EtaMethod method) {
  const SchemeParams& params = ball.params();
  beta.validate(params);
  if (static_cast<int>(face_positions.size()) != h) throw ParameterError("eta_sum: the face must have dimension h");
  if (ball.radius() < h) throw ParameterError("eta_sum: the ball must cover radius h");
  if ((weight_support(beta).support.mask() & ~face_positions.mask()) != 0) {
    throw ParameterError("eta_sum: beta must be supported within the face");
  }
  const LocalDistribution inside = local_distribution(params, ball.values(), face_positions, beta);
  if (method == EtaMethod::transfer) {
    Complex total = 0.0;
    for (const Complex& v : transfer_orthogonal(inside, params, h).components) total += v;
    return total;
  }
  Complex acc = 0.0;
  for (int j = 0; j <= h; ++j) {
    const Complex term = std::pow(static_cast<double>(params.q - 1), h - j) * inside.components[static_cast<std::size_t>(j)];
    acc += (j % 2) ? -term : term;
  }
  return std::pow(static_cast<double>(params.q), params.n - 2 * h) * acc;
}

VertexFunction reconstruct_full(const SphereData& sphere, int h, const ReconOptions& options) {
  const SchemeParams& params = sphere.params();
  if (sphere.radius() != h) throw ParameterError("full reconstruction needs the sphere of radius h");
  require_conditions(params, h, h);
  if (h == 0) {
    // V_0 is the constants.
    return VertexFunction(params, std::vector<Complex>(params.size(), sphere.values()[0]), 0);
  }

  ReconOptions ball_options = options;
  ball_options.check_consistency = false;
  const BallData ball = reconstruct_ball(sphere, h, ball_options);

  const Cube cube(params);
  const FourierContext ctx(params.q);
  VertexFunction spectrum(params);
  const double prefactor = std::pow(static_cast<double>(params.q), params.n - 2 * h);
  std::vector<double> alternating(static_cast<std::size_t>(h) + 1);
  for (int j = 0; j <= h; ++j) alternating[static_cast<std::size_t>(j)] = ((j % 2) ? -1.0 : 1.0) * std::pow(params.q - 1.0, h - j);

  for (const IndexSet& face_positions : subsets_of_size(params.n, h)) {
    const std::uint32_t mask = face_positions.mask();
    const auto members = supported_within(cube, mask);
    std::vector<Complex> eta(members.size());
    if (options.eta == EtaMethod::closed_form) {
      const auto profiles = kernels::parallel::face_profiles(cube, ball.values(), members, h);
      for (std::size_t b = 0; b < members.size(); ++b) {
        Complex acc = 0.0;
        for (int j = 0; j <= h; ++j) acc += alternating[static_cast<std::size_t>(j)] * profiles[b * (static_cast<std::size_t>(h) + 1) + static_cast<std::size_t>(j)];
        eta[b] = prefactor * acc;
      }
    } else {
      for (std::size_t b = 0; b < members.size(); ++b) {
        eta[b] = eta_sum(face_positions, Word::unrank(members[b], params), ball, h, EtaMethod::transfer);
      }
    }
    std::vector<std::uint32_t> targets;
    for (std::uint32_t r : members) {
      if (cube.support_mask(r) == mask) targets.push_back(r);
    }
    const auto target_count = static_cast<long>(targets.size());
#pragma omp parallel for schedule(static)
    for (long t = 0; t < target_count; ++t) {
      const std::uint32_t alpha = targets[static_cast<std::size_t>(t)];
      const auto a = cube.digits(alpha);
      Complex acc = 0.0;
      for (std::size_t b = 0; b < members.size(); ++b) {
        const auto g = cube.digits(members[b]);
        long dot = 0;
        for (std::size_t p = 0; p < a.size(); ++p) dot += static_cast<long>(a[p]) * g[p];
        acc += std::conj(ctx.power(dot)) * eta[b];
      }
      spectrum[alpha] = acc;
    }
  }

  VertexFunction f = inverse_fourier(spectrum);
  f.set_eigenindex(h);

  if (options.check_consistency) {
    double worst = 0.0;
    for (std::uint32_t r = 0; r < cube.size(); ++r) {
      if (cube.weight(r) <= h) worst = std::max(worst, std::abs(f[r] - ball.values()[r]));
    }
    if (worst > options.tolerance * scale_of(sphere.values())) {
      throw InconsistentDataError("reconstructed function does not reproduce the sphere data (gap " +
                                      std::to_string(worst) + ")",
                                  worst);
    }
  }
  return f;
}

}  // namespace hamrecon
