#include "wcolab/moebius.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wcolab {

namespace {

// Matrix [[p, q], [r, s]] acting as z -> (p z + q)/(r z + s).
struct Mat {
  Complex p, q, r, s;
};

Mat matrix_of(const Automorphism& f) {
  // lambda (a - z)/(1 - conj(a) z) = (-lambda z + lambda a)/(-conj(a) z + 1)
  return Mat{-f.lambda(), f.lambda() * f.a(), -std::conj(f.a()), Complex{1.0, 0.0}};
}

Mat matmul(const Mat& x, const Mat& y) {
  return Mat{x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s,
             x.r * y.p + x.s * y.r, x.r * y.q + x.s * y.s};
}

Automorphism canonicalize(const Mat& m) {
  // Zero of (p z + q)/(r z + s). p cannot vanish for a genuine automorphism
  // matrix (its (0,0) entry is a nonzero multiple of -lambda).
  const Complex a = -m.q / m.p;
  if (std::abs(a) <= 1e-14) {
    // Rotation branch: the map is (p/s) z and phi_{lambda,0}(z) = -lambda z.
    return Automorphism(-m.p / m.s, Complex{});
  }
  const Complex lambda = (m.q / m.s) / a;  // value at 0 is lambda a
  return Automorphism(lambda, a);
}

}  // namespace

Automorphism::Automorphism(Complex lambda, Complex a) : lambda_(lambda), a_(a) {
  const double mod = std::abs(lambda_);
  if (!(mod > 0.0))
    throw std::invalid_argument("Automorphism: lambda must be nonzero");
  lambda_ /= mod;
  if (!(std::abs(a_) < 1.0))
    throw std::invalid_argument("Automorphism: |a| must be < 1");
}

Automorphism Automorphism::rotation(Complex multiplier) {
  return Automorphism(-multiplier, Complex{});
}

Complex Automorphism::apply(Complex z) const {
  const Complex den = 1.0 - std::conj(a_) * z;
  if (den == Complex{})
    throw std::domain_error("Automorphism: pole at z = 1/conj(a)");
  return lambda_ * (a_ - z) / den;
}

Complex Automorphism::derivative_at(Complex z) const {
  const Complex den = 1.0 - std::conj(a_) * z;
  if (den == Complex{})
    throw std::domain_error("Automorphism: pole at z = 1/conj(a)");
  return lambda_ * (std::norm(a_) - 1.0) / (den * den);
}

TruncatedSeries Automorphism::taylor(std::size_t N) const {
  if (N == 0) throw std::invalid_argument("taylor: zero length");
  std::vector<Complex> c(N);
  c[0] = lambda_ * a_;
  const Complex factor = lambda_ * (std::norm(a_) - 1.0);
  Complex pw{1.0, 0.0};
  for (std::size_t n = 1; n < N; ++n) {
    c[n] = factor * pw;
    pw *= std::conj(a_);
  }
  return TruncatedSeries(std::move(c));
}

std::string Automorphism::describe() const {
  std::ostringstream os;
  if (is_rotation()) {
    const Complex m = rotation_multiplier();
    os << "rot(" << m.real() << (m.imag() < 0 ? "" : "+") << m.imag() << "i)";
  } else {
    os << "aut(lambda=" << lambda_.real() << (lambda_.imag() < 0 ? "" : "+")
       << lambda_.imag() << "i,a=" << a_.real() << (a_.imag() < 0 ? "" : "+")
       << a_.imag() << "i)";
  }
  return os.str();
}

Automorphism compose(const Automorphism& inner_first, const Automorphism& outer) {
  return canonicalize(matmul(matrix_of(outer), matrix_of(inner_first)));
}

Automorphism invert(const Automorphism& aut) {
  const Mat m = matrix_of(aut);
  return canonicalize(Mat{m.s, -m.q, -m.r, m.p});
}

Complex moved_center(Complex lambda, Complex a, Complex tau) {
  const Complex lt = lambda * tau;
  return std::conj(tau) * a * (lt - 1.0) / (lt - std::norm(a));
}

Complex find_tau_for_target_radius(Complex lambda, Complex a, double b) {
  if (a == Complex{})
    throw std::invalid_argument("find_tau_for_target_radius: a must be nonzero");
  const double amod = std::abs(a);
  if (!(b >= 0.0) || b > amod)
    throw std::domain_error("find_tau_for_target_radius: need 0 <= b <= |a|");
  lambda /= std::abs(lambda);
  const Complex lbar = std::conj(lambda);
  if (b == 0.0) return lbar;

  // |moved_center| at tau = conj(lambda) e^{it}: value 0 at t = 0 and
  // 2|a|/(1+|a|^2) > b at t = pi, so the bracket [0, pi] always works.
  auto radius_gap = [&](double t) {
    return std::abs(moved_center(lambda, a, lbar * std::polar(1.0, t))) - b;
  };
  double lo = 0.0, hi = std::numbers::pi;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (radius_gap(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return lbar * std::polar(1.0, 0.5 * (lo + hi));
}

std::optional<Automorphism> match_automorphism(const TruncatedSeries& phi,
                                               double tol) {
  if (phi.length() < 2) return std::nullopt;
  const Complex c0 = phi[0];
  const Complex c1 = phi[1];
  if (!(std::abs(c0) < 1.0)) return std::nullopt;

  // c0 = lambda a and c1 = lambda (|a|^2 - 1) determine the candidate.
  Complex lambda = c1 / (std::norm(c0) - 1.0);
  if (std::abs(std::abs(lambda) - 1.0) > tol) return std::nullopt;
  lambda /= std::abs(lambda);
  const Complex a = c0 * std::conj(lambda);
  if (!(std::abs(a) < 1.0)) return std::nullopt;

  const Automorphism candidate(lambda, a);
  const TruncatedSeries expansion = candidate.taylor(phi.length());
  for (std::size_t n = 0; n < phi.length(); ++n)
    if (std::abs(phi[n] - expansion[n]) > tol) return std::nullopt;
  return candidate;
}

}  // namespace wcolab
