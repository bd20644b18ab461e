#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hamrecon/coeffs.hpp"
#include "hamrecon/spectral.hpp"

namespace hamrecon {

/// Reconstruction refused because a sufficient nondegeneracy condition fails.
class ConditionFailureError : public std::runtime_error {
 public:
  explicit ConditionFailureError(ConditionReport report);
  const ConditionReport& report() const { return report_; }

 private:
  ConditionReport report_;
};

/// The sphere data is not the restriction of any eigenfunction with the requested index.
class InconsistentDataError : public std::runtime_error {
 public:
  InconsistentDataError(const std::string& what, double residual);
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Values on the words of weight exactly `radius` (dense storage, zero elsewhere).
class SphereData {
 public:
  SphereData(const SchemeParams& params, int radius);

  static SphereData restrict_to(const VertexFunction& f, int radius);

  const SchemeParams& params() const { return params_; }
  int radius() const { return radius_; }
  std::span<const Complex> values() const { return values_; }
  bool contains(const Word& w) const { return weight(w) == radius_; }
  Complex at(const Word& w) const;
  void set(const Word& w, Complex value);
  std::size_t domain_size() const;

 private:
  SchemeParams params_;
  int radius_;
  std::vector<Complex> values_;
};

/// Values on the words of weight at most `radius`.
class BallData {
 public:
  BallData(const SchemeParams& params, int radius);

  static BallData restrict_to(const VertexFunction& f, int radius);

  const SchemeParams& params() const { return params_; }
  int radius() const { return radius_; }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }
  bool contains(const Word& w) const { return weight(w) <= radius_; }
  Complex at(const Word& w) const;
  void set(const Word& w, Complex value);
  /// Zero outside the ball.
  VertexFunction to_function(std::optional<int> eigenindex = std::nullopt) const;

 private:
  SchemeParams params_;
  int radius_;
  std::vector<Complex> values_;
};

/// One weight-k layer: the right-hand side and solution over the words of support exactly I,
/// ordered as full_support_ranks(params, I).
struct LayerSystem {
  IndexSet support;
  std::vector<Complex> rhs;
  std::vector<Complex> solution;
};

enum class EtaMethod {
  closed_form,  ///< q^(n-2h) sum_j (-1)^j (q-1)^(h-j) v_j
  transfer      ///< sum of the transferred orthogonal-face distribution
};

struct ReconOptions {
  double tolerance = 1e-8;
  EtaMethod eta = EtaMethod::closed_form;
  bool check_consistency = true;
};

/// f(0) = (sum of the sphere values) / P^{(q)}_d(h; n).
Complex reconstruct_origin(const SphereData& sphere, int h);

/// Phi^I - Psi^I for the layer |I| = k, using sphere values and the already known lighter layers.
std::vector<Complex> layer_rhs(const IndexSet& support, const SphereData& sphere, const BallData& partial, int h);

/// Inverts sum_i r^k_{i,d-k} D_i^{q-1,k} on the rhs through the (q-1)-ary k-dimensional transform.
std::vector<Complex> solve_layer(const LayerSystem& system, const SchemeParams& params, int h, int d);
std::vector<Complex> solve_layer(std::span<const Complex> rhs, const EigenSums& sums);

/// Values on the ball of radius d from values on the sphere of radius d.
BallData reconstruct_ball(const SphereData& sphere, int h, const ReconOptions& options = {});

/// Sum of f over the face orthogonal to `face_positions` through beta, computed from the known
/// values inside the h-dimensional face (beta must be supported within `face_positions`).
Complex eta_sum(const IndexSet& face_positions, const Word& beta, const BallData& ball, int h,
                EtaMethod method = EtaMethod::closed_form);

/// The whole eigenfunction from its values on the sphere of radius h.
VertexFunction reconstruct_full(const SphereData& sphere, int h, const ReconOptions& options = {});

}  // namespace hamrecon
