#pragma once

#include <span>
#include <vector>

#include "hamrecon/polynomial.hpp"
#include "hamrecon/spectral.hpp"

namespace hamrecon {

/// Per-distance sums of a function over the face with free positions `face` through `anchor`:
/// components[j] = sum of f over the words of that face at distance j from the anchor.
struct LocalDistribution {
  IndexSet face;
  Word anchor;
  std::vector<Complex> components;

  int dimension() const { return static_cast<int>(face.size()); }
};

LocalDistribution local_distribution(const VertexFunction& f, const IndexSet& face, const Word& anchor);
/// Same, reading from a dense value array (e.g. a partially known ball).
LocalDistribution local_distribution(const SchemeParams& params, std::span<const Complex> values,
                                     const IndexSet& face, const Word& anchor);

/// The local enumerator: sum_j v_j y^j x^(|I|-j).
HomogeneousPoly enumerator(const LocalDistribution& dist);
Complex enumerator_eval(const LocalDistribution& dist, Complex x, Complex y);

/// Coefficients of y^l x^(k-l) in g(x + (q-2) y, -y), l = 0..k.
std::vector<Complex> substituted_coefficients(const LocalDistribution& dist, int q);

/// Distribution in the orthogonal face around the same anchor, components 0..n-k, for an
/// eigenfunction with index h. Needs k <= min(h, n-h) or n-h < k <= h.
LocalDistribution transfer_orthogonal(const LocalDistribution& dist, const SchemeParams& params, int h);

/// Largest coefficient gap between the two sides of the orthogonal-face enumerator identity
/// (cross-multiplied so both sides are polynomials).
double verify_face_relation(const VertexFunction& f, const IndexSet& face, const Word& anchor, int h);

/// Split of the (s(alpha), alpha) distribution into full-support words (sigma) and lighter words (delta).
struct SigmaDelta {
  std::vector<Complex> sigma;
  std::vector<Complex> delta;
};

SigmaDelta sigma_delta_split(const VertexFunction& f, const Word& alpha);
SigmaDelta sigma_delta_split(const SchemeParams& params, std::span<const Complex> values, const Word& alpha);

}  // namespace hamrecon
