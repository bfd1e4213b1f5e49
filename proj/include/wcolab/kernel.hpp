#pragma once

#include <optional>

#include "wcolab/moebius.hpp"
#include "wcolab/series.hpp"
#include "wcolab/weights.hpp"

namespace wcolab {

/// Truncated kernel value with a geometric tail bound when the weight
/// family supplies a ratio bound; nullopt means "truncation-only", the
/// result carries no accuracy certificate beyond the retained terms.
struct KernelValue {
  Complex value;
  std::optional<double> tail_bound;
};

/// sum_{n<N} gamma(n) (conj(w) z)^n. Requires |w| < 1 and |z| < 1 and ws
/// materialized through N-1.
KernelValue kernel_value(const WeightSequence& ws, Complex w, Complex z,
                         std::size_t N);

/// Coordinates of the kernel at w in the orthonormal basis e_n = sqrt(gamma(n)) z^n:
/// coords[n] = sqrt(gamma(n)) conj(w)^n.
struct KernelSection {
  Complex w;
  std::vector<Complex> coords;
  double norm() const;
};

KernelSection kernel_vector(const WeightSequence& ws, Complex w, std::size_t N);

/// sqrt of the truncated diagonal value: sqrt(sum_{n<N} gamma(n) |w|^{2n}).
double kernel_norm(const WeightSequence& ws, Complex w, std::size_t N);

/// Termwise z-derivative of the truncated kernel:
/// sum_{1<=n<N} n gamma(n) conj(w)^n z^{n-1}.
Complex kernel_derivative_value(const WeightSequence& ws, Complex w, Complex z,
                                std::size_t N);

/// | <f, K_w> - f(w) | where the inner product is computed coefficientwise
/// as sum_n a_n conj(gamma(n) conj(w)^n) / gamma(n). Exact reproduction up
/// to rounding for polynomials; requires N > deg f.
double reproducing_check(const WeightSequence& ws, const TruncatedSeries& f,
                         Complex w, std::size_t N);

/// The weight that makes the composition pair unitary on an hgamma-class
/// space: F = nu (1-|a|^2)^{g/2} (1 - conj(a) z)^{-g} with g = gamma(1) and
/// a the parameter of the automorphism (its preimage of 0). This is the
/// normalized kernel section nu K_a / ||K_a||, a branch-free form: |F|
/// equals |phi'|^{g/2} pointwise. Throws std::domain_error when ws does not
/// classify as HGamma.
TruncatedSeries canonical_weight(const WeightSequence& ws, const Automorphism& aut,
                                 Complex nu, std::size_t N);

/// The weight forced on any space by the co-isometry identities:
/// F(z) = 1 / (conj(F(0)) K_{phi(0)}(phi(z))) with |F(0)|^2 = 1/K_{phi(0)}(phi(0))
/// and F(0) taken real positive. Built from the truncated kernel composed
/// with the Taylor expansion of phi, then inverted as a series. On an
/// hgamma-class space this reproduces canonical_weight with nu = 1.
TruncatedSeries forced_weight(const WeightSequence& ws, const Automorphism& aut,
                              std::size_t N);

}  // namespace wcolab
