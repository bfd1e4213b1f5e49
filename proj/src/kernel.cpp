#include "wcolab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wcolab {

namespace {

void require_interior(Complex w, const char* who) {
  if (!(std::abs(w) < 1.0))
    throw std::domain_error(std::string(who) + ": point must lie inside the unit disk");
}

void require_materialized(const WeightSequence& ws, std::size_t N, const char* who) {
  if (N == 0) throw std::invalid_argument(std::string(who) + ": N must be >= 1");
  if (ws.max_index() + 1 < N)
    throw std::invalid_argument(std::string(who) +
                                ": weights materialized through " +
                                std::to_string(ws.max_index()) + ", need " +
                                std::to_string(N - 1));
}

}  // namespace

KernelValue kernel_value(const WeightSequence& ws, Complex w, Complex z,
                         std::size_t N) {
  require_interior(w, "kernel_value");
  require_interior(z, "kernel_value");
  require_materialized(ws, N, "kernel_value");
  const Complex x = std::conj(w) * z;
  Complex sum{};
  Complex pw{1.0, 0.0};
  for (std::size_t n = 0; n < N; ++n) {
    sum += ws.gamma(n) * pw;
    pw *= x;
  }
  std::optional<double> tail;
  if (auto ratio = ws.tail_ratio_bound(N)) {
    const double r = std::abs(x);
    if (*ratio * r < 1.0) {
      // gamma(N+j) <= gamma(N-1) ratio^{j+1}, so the tail is dominated by a
      // geometric series starting at the first dropped term.
      const double first = ws.gamma(N - 1) * (*ratio) * std::pow(r, double(N));
      tail = first / (1.0 - *ratio * r);
    }
  }
  return KernelValue{sum, tail};
}

double KernelSection::norm() const {
  double s = 0.0;
  for (const Complex& c : coords) s += std::norm(c);
  return std::sqrt(s);
}

KernelSection kernel_vector(const WeightSequence& ws, Complex w, std::size_t N) {
  require_interior(w, "kernel_vector");
  require_materialized(ws, N, "kernel_vector");
  KernelSection k{w, std::vector<Complex>(N)};
  const Complex wbar = std::conj(w);
  Complex pw{1.0, 0.0};
  for (std::size_t n = 0; n < N; ++n) {
    k.coords[n] = std::sqrt(ws.gamma(n)) * pw;
    pw *= wbar;
  }
  return k;
}

double kernel_norm(const WeightSequence& ws, Complex w, std::size_t N) {
  require_interior(w, "kernel_norm");
  require_materialized(ws, N, "kernel_norm");
  const double r2 = std::norm(w);
  double sum = 0.0;
  double pw = 1.0;
  for (std::size_t n = 0; n < N; ++n) {
    sum += ws.gamma(n) * pw;
    pw *= r2;
  }
  return std::sqrt(sum);
}

Complex kernel_derivative_value(const WeightSequence& ws, Complex w, Complex z,
                                std::size_t N) {
  require_interior(w, "kernel_derivative_value");
  require_interior(z, "kernel_derivative_value");
  require_materialized(ws, N, "kernel_derivative_value");
  const Complex wbar = std::conj(w);
  Complex sum{};
  Complex wpw = wbar;        // conj(w)^n
  Complex zpw{1.0, 0.0};     // z^{n-1}
  for (std::size_t n = 1; n < N; ++n) {
    sum += double(n) * ws.gamma(n) * wpw * zpw;
    wpw *= wbar;
    zpw *= z;
  }
  return sum;
}

double reproducing_check(const WeightSequence& ws, const TruncatedSeries& f,
                         Complex w, std::size_t N) {
  require_interior(w, "reproducing_check");
  require_materialized(ws, N, "reproducing_check");
  if (N <= f.length() - 1)
    throw std::invalid_argument("reproducing_check: N must exceed deg f");
  const Complex wbar = std::conj(w);
  Complex ip{};
  Complex pw{1.0, 0.0};
  for (std::size_t n = 0; n < f.length(); ++n) {
    ip += f[n] * std::conj(ws.gamma(n) * pw) / ws.gamma(n);
    pw *= wbar;
  }
  return std::abs(ip - evaluate(f, w));
}

TruncatedSeries canonical_weight(const WeightSequence& ws, const Automorphism& aut,
                                 Complex nu, std::size_t N) {
  require_materialized(ws, N, "canonical_weight");
  if (ws.max_index() < 3)
    throw std::invalid_argument("canonical_weight: too few weights to classify");
  const std::size_t n_check = std::min<std::size_t>(50, ws.max_index() - 1);
  const SpaceClass cls = classify(ws, n_check);
  if (!cls.is_hgamma())
    throw std::domain_error("canonical_weight: space classified as " +
                            cls.describe() + ", not HGamma");
  const double g = cls.gamma;
  const Complex a = aut.a();
  const Complex factor = nu * std::pow(1.0 - std::norm(a), 0.5 * g);
  return scale(binomial_power(std::conj(a), g, N), factor);
}

TruncatedSeries forced_weight(const WeightSequence& ws, const Automorphism& aut,
                              std::size_t N) {
  require_materialized(ws, N, "forced_weight");
  const Complex w0 = aut.apply(Complex{});  // phi(0) = lambda a
  const double diag = kernel_value(ws, w0, w0, N).value.real();
  const double f0 = 1.0 / std::sqrt(diag);

  // K_{w0} composed with the expansion of phi, inverted as a series.
  std::vector<Complex> kc(N);
  const Complex w0bar = std::conj(w0);
  Complex pw{1.0, 0.0};
  for (std::size_t n = 0; n < N; ++n) {
    kc[n] = ws.gamma(n) * pw;
    pw *= w0bar;
  }
  const TruncatedSeries composed =
      apply_polynomial(TruncatedSeries(std::move(kc)), aut.taylor(N), N);
  return scale(reciprocal(composed, N), 1.0 / f0);
}

}  // namespace wcolab
