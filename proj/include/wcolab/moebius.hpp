#pragma once

#include <optional>
#include <string>

#include "wcolab/series.hpp"

namespace wcolab {

/// Disk automorphism in the canonical two-parameter form
///
///     phi_{lambda,a}(z) = lambda (a - z) / (1 - conj(a) z),
///
/// with |lambda| = 1 and |a| < 1. The map exchanges a and the origin. Note
/// the sign convention: phi_{lambda,0}(z) = -lambda z, so the identity is
/// (lambda, a) = (-1, 0) and a rotation z -> t z is (lambda, a) = (-t, 0).
class Automorphism {
 public:
  /// lambda is renormalized to unit modulus (throws on lambda = 0);
  /// requires |a| < 1 strictly.
  Automorphism(Complex lambda, Complex a);

  /// The rotation z -> multiplier z (|multiplier| renormalized to 1).
  static Automorphism rotation(Complex multiplier);
  static Automorphism identity() { return rotation(Complex{1.0, 0.0}); }

  Complex lambda() const { return lambda_; }
  Complex a() const { return a_; }

  bool is_rotation(double tol = 0.0) const { return std::abs(a_) <= tol; }
  /// The multiplier of a rotation: phi_{lambda,0}(z) = (-lambda) z.
  Complex rotation_multiplier() const { return -lambda_; }

  Complex apply(Complex z) const;

  /// lambda (|a|^2 - 1) / (1 - conj(a) z)^2.
  Complex derivative_at(Complex z) const;

  /// Taylor coefficients: lambda a, then lambda (|a|^2 - 1) conj(a)^{n-1}.
  TruncatedSeries taylor(std::size_t N) const;

  std::string describe() const;

 private:
  Complex lambda_;
  Complex a_;
};

/// Canonical parameters of outer( inner_first(z) ), recovered from the 2x2
/// linear-fractional matrix product: a = zero of the composite, lambda from
/// the value structure (rotation branch when |a| <= 1e-14).
Automorphism compose(const Automorphism& inner_first, const Automorphism& outer);

/// The automorphism psi with psi(aut(z)) = z.
Automorphism invert(const Automorphism& aut);

/// Zero c of the square phi_{tau lambda, conj(tau) a} o phi_{tau lambda, conj(tau) a}:
///
///     c = conj(tau) a (lambda tau - 1) / (lambda tau - |a|^2).
///
/// |c| sweeps [0, 2|a|/(1+|a|^2)] as tau runs over the circle, with c = 0 at
/// tau = conj(lambda) and the maximum at tau = -conj(lambda).
Complex moved_center(Complex lambda, Complex a, Complex tau);

/// Unimodular tau with | |moved_center(lambda, a, tau)| - b | < 1e-10, found
/// by bisection in the angle between the two endpoints above (60 halvings).
/// Requires a != 0 and 0 <= b <= |a|; any bracketed root is acceptable.
Complex find_tau_for_target_radius(Complex lambda, Complex a, double b);

/// Recovers (lambda, a) from the first two Taylor coefficients and accepts
/// only if every retained coefficient matches the candidate within tol.
/// Returns nullopt for series that are definitely not automorphisms in the
/// retained window (or too short to decide: length < 2).
std::optional<Automorphism> match_automorphism(const TruncatedSeries& phi,
                                               double tol);

}  // namespace wcolab
