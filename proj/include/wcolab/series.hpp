#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace wcolab {

using Complex = std::complex<double>;

/// Taylor coefficients a_0..a_{N-1} of an analytic function on the unit
/// disk. N = length() is the truncation (number of retained terms).
/// Arithmetic never fabricates high-order terms: binary operations return
/// the minimum truncation of their inputs. Values are immutable in spirit;
/// all operations below are pure and safe to run in parallel.
struct TruncatedSeries {
  std::vector<Complex> coeff;

  explicit TruncatedSeries(std::vector<Complex> c);

  static TruncatedSeries zero(std::size_t n);
  static TruncatedSeries constant(Complex value, std::size_t n = 1);

  std::size_t length() const { return coeff.size(); }
  Complex operator[](std::size_t i) const { return coeff[i]; }
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, Complex c);

/// Cauchy product truncated to min(length(f), length(g)).
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Termwise derivative; the truncation drops by one. A length-1 input has
/// no retained derivative information and yields the length-1 zero series.
TruncatedSeries derivative(const TruncatedSeries& f);

/// Multiplicative inverse g with mul(f, g) = (1, 0, ..., 0) through degree
/// N-1, by the usual coefficient recursion. Coefficients of f beyond its
/// length are treated as exact zeros. Throws std::domain_error when the
/// constant term vanishes.
TruncatedSeries reciprocal(const TruncatedSeries& f, std::size_t N);

/// Coefficients of (1 - abar z)^(-exponent): c_0 = 1 and
/// c_n = c_{n-1} * abar * (n-1+exponent)/n. Requires |abar| < 1.
TruncatedSeries binomial_power(Complex abar, double exponent, std::size_t N);

/// [phi^0, phi^1, ..., phi^{count-1}], each truncated at length N. phi is
/// zero-padded to N first, so an input shorter than N is read as an exact
/// polynomial. Requires |phi(0)| < 1.
std::vector<TruncatedSeries> powers_of(const TruncatedSeries& phi,
                                       std::size_t N, std::size_t count);

/// sum_j coeffs[j] psi^j truncated at N: composition of the retained
/// polynomial with psi. Requires |psi(0)| < 1.
TruncatedSeries apply_polynomial(const TruncatedSeries& coeffs,
                                 const TruncatedSeries& psi, std::size_t N);

/// Horner evaluation of the retained polynomial. No tail correction: the
/// caller controls accuracy through the truncation length.
Complex evaluate(const TruncatedSeries& f, Complex z);

/// Append exact zeros up to length n (n >= length). Opt-in statement that
/// the missing coefficients are genuinely zero.
TruncatedSeries padded(const TruncatedSeries& f, std::size_t n);

/// Keep the first n coefficients (n <= length, n >= 1).
TruncatedSeries truncated(const TruncatedSeries& f, std::size_t n);

/// padded or truncated, whichever applies.
TruncatedSeries resized(const TruncatedSeries& f, std::size_t n);

/// f(tau z): coefficient n picks up a factor tau^n.
TruncatedSeries rotate_argument(const TruncatedSeries& f, Complex tau);

}  // namespace wcolab
