#include "wcolab/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcolab {

TruncatedSeries::TruncatedSeries(std::vector<Complex> c) : coeff(std::move(c)) {
  if (coeff.empty())
    throw std::invalid_argument("TruncatedSeries: at least one coefficient required");
}

TruncatedSeries TruncatedSeries::zero(std::size_t n) {
  if (n == 0) throw std::invalid_argument("TruncatedSeries: zero length");
  return TruncatedSeries(std::vector<Complex>(n, Complex{}));
}

TruncatedSeries TruncatedSeries::constant(Complex value, std::size_t n) {
  TruncatedSeries f = zero(n);
  f.coeff[0] = value;
  return f;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.length(), g.length());
  std::vector<Complex> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = f.coeff[i] + g.coeff[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& f, Complex s) {
  std::vector<Complex> c(f.coeff);
  for (Complex& x : c) x *= s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.length(), g.length());
  std::vector<Complex> c(n, Complex{});
  for (std::size_t m = 0; m < n; ++m) {
    Complex s{};
    for (std::size_t i = 0; i <= m; ++i) s += f.coeff[i] * g.coeff[m - i];
    c[m] = s;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  if (f.length() == 1) return TruncatedSeries::zero(1);
  std::vector<Complex> c(f.length() - 1);
  for (std::size_t i = 0; i + 1 < f.length(); ++i)
    c[i] = double(i + 1) * f.coeff[i + 1];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries& f, std::size_t N) {
  if (N == 0) throw std::invalid_argument("reciprocal: zero length");
  if (f.coeff[0] == Complex{})
    throw std::domain_error("reciprocal: constant term vanishes");
  std::vector<Complex> b(N, Complex{});
  b[0] = 1.0 / f.coeff[0];
  for (std::size_t n = 1; n < N; ++n) {
    Complex s{};
    const std::size_t kmax = std::min(n, f.length() - 1);
    for (std::size_t k = 1; k <= kmax; ++k) s += f.coeff[k] * b[n - k];
    b[n] = -s / f.coeff[0];
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries binomial_power(Complex abar, double exponent, std::size_t N) {
  if (N == 0) throw std::invalid_argument("binomial_power: zero length");
  if (!(std::abs(abar) < 1.0))
    throw std::invalid_argument("binomial_power: |abar| must be < 1");
  std::vector<Complex> c(N);
  c[0] = Complex{1.0, 0.0};
  // Same two-term recurrence that generates the weight sequence of the
  // kernel (1 - abar z)^(-exponent); kept in this exact form so the two
  // code paths are comparable term by term.
  double g = 1.0;
  Complex p{1.0, 0.0};
  for (std::size_t n = 1; n < N; ++n) {
    g *= (double(n) - 1.0 + exponent) / double(n);
    p *= abar;
    c[n] = g * p;
  }
  return TruncatedSeries(std::move(c));
}

std::vector<TruncatedSeries> powers_of(const TruncatedSeries& phi,
                                       std::size_t N, std::size_t count) {
  if (count == 0) throw std::invalid_argument("powers_of: count must be >= 1");
  if (!(std::abs(phi.coeff[0]) < 1.0))
    throw std::invalid_argument("powers_of: |phi(0)| must be < 1");
  const TruncatedSeries p = resized(phi, N);
  std::vector<TruncatedSeries> out;
  out.reserve(count);
  out.push_back(TruncatedSeries::constant(1.0, N));
  for (std::size_t j = 1; j < count; ++j) out.push_back(mul(out.back(), p));
  return out;
}

TruncatedSeries apply_polynomial(const TruncatedSeries& coeffs,
                                 const TruncatedSeries& psi, std::size_t N) {
  if (!(std::abs(psi.coeff[0]) < 1.0))
    throw std::invalid_argument("apply_polynomial: |psi(0)| must be < 1");
  const TruncatedSeries p = resized(psi, N);
  TruncatedSeries acc = TruncatedSeries::constant(coeffs.coeff[0], N);
  TruncatedSeries pw = TruncatedSeries::constant(1.0, N);
  for (std::size_t j = 1; j < coeffs.length(); ++j) {
    pw = mul(pw, p);
    for (std::size_t m = 0; m < N; ++m) acc.coeff[m] += coeffs.coeff[j] * pw.coeff[m];
  }
  return acc;
}

Complex evaluate(const TruncatedSeries& f, Complex z) {
  Complex s{};
  for (std::size_t i = f.length(); i-- > 0;) s = s * z + f.coeff[i];
  return s;
}

TruncatedSeries padded(const TruncatedSeries& f, std::size_t n) {
  if (n < f.length()) throw std::invalid_argument("padded: target shorter than input");
  std::vector<Complex> c(f.coeff);
  c.resize(n, Complex{});
  return TruncatedSeries(std::move(c));
}

TruncatedSeries truncated(const TruncatedSeries& f, std::size_t n) {
  if (n == 0 || n > f.length())
    throw std::invalid_argument("truncated: bad target length");
  return TruncatedSeries(std::vector<Complex>(f.coeff.begin(), f.coeff.begin() + n));
}

TruncatedSeries resized(const TruncatedSeries& f, std::size_t n) {
  return n >= f.length() ? padded(f, n) : truncated(f, n);
}

TruncatedSeries rotate_argument(const TruncatedSeries& f, Complex tau) {
  std::vector<Complex> c(f.length());
  Complex t{1.0, 0.0};
  for (std::size_t i = 0; i < f.length(); ++i) {
    c[i] = f.coeff[i] * t;
    t *= tau;
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace wcolab
