#include "wcolab/wco.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wcolab {

namespace {

bool effectively_zero(const TruncatedSeries& f) {
  for (const Complex& c : f.coeff)
    if (c != Complex{}) return false;
  return true;
}

void check_build_args(const WeightSequence& ws, std::size_t N, std::size_t k,
                      std::size_t max_dim, const char* who) {
  if (N == 0) throw std::invalid_argument(std::string(who) + ": N must be >= 1");
  if (N > max_dim)
    throw std::length_error(std::string(who) + ": N=" + std::to_string(N) +
                            " exceeds the configured cap " + std::to_string(max_dim));
  if (k > N) throw std::invalid_argument(std::string(who) + ": k must be <= N");
  if (ws.max_index() + 1 < N)
    throw std::invalid_argument(std::string(who) + ": weights materialized through " +
                                std::to_string(ws.max_index()) + ", need " +
                                std::to_string(N - 1));
}

std::vector<double> sqrt_gammas(const WeightSequence& ws, std::size_t N) {
  std::vector<double> s(N);
  for (std::size_t n = 0; n < N; ++n) s[n] = std::sqrt(ws.gamma(n));
  return s;
}

// Frobenius norm of (G - I) for a k x k Gram block stored row-major.
double gram_defect(const std::vector<Complex>& gram, std::size_t k) {
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Complex d = gram[i * k + j] - (i == j ? Complex{1.0, 0.0} : Complex{});
      s += std::norm(d);
    }
  return std::sqrt(s);
}

}  // namespace

WCOSymbols::WCOSymbols(WeightSpec w, std::variant<Automorphism, TruncatedSeries> p)
    : weight_(std::move(w)), phi_(std::move(p)) {
  if (const auto* s = std::get_if<TruncatedSeries>(&phi_)) {
    if (!(std::abs(s->coeff[0]) < 1.0))
      throw std::invalid_argument("WCOSymbols: |phi(0)| must be < 1");
  }
  if (const auto* f = std::get_if<TruncatedSeries>(&weight_)) {
    if (effectively_zero(*f))
      throw std::invalid_argument("WCOSymbols: weight must not be identically zero");
  }
  if (!std::holds_alternative<TruncatedSeries>(weight_) &&
      !std::holds_alternative<Automorphism>(phi_))
    throw std::invalid_argument(
        "WCOSymbols: derived weights require an automorphism symbol");
}

WCOSymbols::WCOSymbols(TruncatedSeries weight, Automorphism phi)
    : WCOSymbols(WeightSpec(std::move(weight)),
                 std::variant<Automorphism, TruncatedSeries>(std::move(phi))) {}

WCOSymbols::WCOSymbols(TruncatedSeries weight, TruncatedSeries phi)
    : WCOSymbols(WeightSpec(std::move(weight)),
                 std::variant<Automorphism, TruncatedSeries>(std::move(phi))) {}

WCOSymbols WCOSymbols::canonical_unitary(Automorphism phi, Complex nu) {
  if (std::abs(std::abs(nu) - 1.0) > 1e-12)
    throw std::invalid_argument("canonical_unitary: nu must be unimodular");
  return WCOSymbols(WeightSpec(CanonicalTag{nu}),
                    std::variant<Automorphism, TruncatedSeries>(std::move(phi)));
}

WCOSymbols WCOSymbols::forced(Automorphism phi) {
  return WCOSymbols(WeightSpec(ForcedTag{}),
                    std::variant<Automorphism, TruncatedSeries>(std::move(phi)));
}

WCOSymbols WCOSymbols::constant_weight(Complex c, Automorphism phi) {
  return WCOSymbols(TruncatedSeries::constant(c), std::move(phi));
}

TruncatedSeries WCOSymbols::weight_series(const WeightSequence& ws,
                                          std::size_t N) const {
  if (const auto* f = std::get_if<TruncatedSeries>(&weight_)) return resized(*f, N);
  const Automorphism& aut = *automorphism();
  if (const auto* c = std::get_if<CanonicalTag>(&weight_))
    return canonical_weight(ws, aut, c->nu, N);
  return forced_weight(ws, aut, N);
}

Complex WCOSymbols::weight_at(const WeightSequence& ws, Complex z,
                              std::size_t N) const {
  return evaluate(weight_series(ws, N), z);
}

TruncatedSeries WCOSymbols::phi_series(std::size_t N) const {
  if (const auto* aut = std::get_if<Automorphism>(&phi_)) return aut->taylor(N);
  return resized(std::get<TruncatedSeries>(phi_), N);
}

Complex WCOSymbols::phi_at(Complex z) const {
  if (const auto* aut = std::get_if<Automorphism>(&phi_)) return aut->apply(z);
  return evaluate(std::get<TruncatedSeries>(phi_), z);
}

Complex WCOSymbols::phi0() const {
  if (const auto* aut = std::get_if<Automorphism>(&phi_))
    return aut->lambda() * aut->a();
  return std::get<TruncatedSeries>(phi_)[0];
}

const Automorphism* WCOSymbols::automorphism() const {
  return std::get_if<Automorphism>(&phi_);
}

const TruncatedSeries* WCOSymbols::phi_raw_series() const {
  return std::get_if<TruncatedSeries>(&phi_);
}

std::string WCOSymbols::describe_weight() const {
  if (const auto* f = std::get_if<TruncatedSeries>(&weight_)) {
    std::ostringstream os;
    os << "series(len=" << f->length() << ")";
    return os.str();
  }
  if (const auto* c = std::get_if<CanonicalTag>(&weight_)) {
    std::ostringstream os;
    os << "canonical-unitary(nu=" << c->nu.real() << (c->nu.imag() < 0 ? "" : "+")
       << c->nu.imag() << "i)";
    return os.str();
  }
  return "forced";
}

std::string WCOSymbols::describe_phi() const {
  if (const auto* aut = std::get_if<Automorphism>(&phi_)) return aut->describe();
  std::ostringstream os;
  os << "series(len=" << std::get<TruncatedSeries>(phi_).length() << ")";
  return os.str();
}

OperatorMatrix::OperatorMatrix(std::size_t dim, std::string provenance)
    : dim_(dim), a_(dim * dim, Complex{}), prov_(std::move(provenance)) {
  if (dim == 0) throw std::invalid_argument("OperatorMatrix: zero dimension");
}

OperatorMatrix build_matrix(const WeightSequence& ws, const WCOSymbols& symbols,
                            std::size_t N, std::size_t max_dim) {
  check_build_args(ws, N, 0, max_dim, "build_matrix");
  const TruncatedSeries F = symbols.weight_series(ws, N);
  const TruncatedSeries phi = symbols.phi_series(N);
  const std::vector<double> sg = sqrt_gammas(ws, N);

  std::ostringstream prov;
  prov << ws.describe() << " | F=" << symbols.describe_weight()
       << " | phi=" << symbols.describe_phi() << " | N=" << N;
  OperatorMatrix A(N, prov.str());

  TruncatedSeries col = F;  // coefficients of F phi^n, column by column
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t m = 0; m < N; ++m)
      A.entry(m, n) = col[m] * (sg[n] / sg[m]);
    if (n + 1 < N) col = mul(col, phi);
  }
  return A;
}

double isometry_defect(const OperatorMatrix& A, std::size_t k) {
  if (k == 0 || k > A.dim())
    throw std::invalid_argument("isometry_defect: need 1 <= k <= N");
  const std::size_t N = A.dim();
  std::vector<Complex> gram(k * k, Complex{});
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        gram[i * k + j] += std::conj(A.at(m, i)) * A.at(m, j);
  return gram_defect(gram, k);
}

double coisometry_defect(const OperatorMatrix& A, std::size_t k) {
  if (k == 0 || k > A.dim())
    throw std::invalid_argument("coisometry_defect: need 1 <= k <= N");
  const std::size_t N = A.dim();
  std::vector<Complex> gram(k * k, Complex{});
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        gram[i * k + j] += A.at(i, n) * std::conj(A.at(j, n));
  return gram_defect(gram, k);
}

BlockDefects block_defects(const WeightSequence& ws, const WCOSymbols& symbols,
                           std::size_t N, std::size_t k, std::size_t max_dim) {
  if (k == 0) throw std::invalid_argument("block_defects: k must be >= 1");
  check_build_args(ws, N, k, max_dim, "block_defects");
  const std::vector<double> sg = sqrt_gammas(ws, N);
  BlockDefects out;

  {
    // Isometry block: first k columns at full height N.
    const TruncatedSeries phi = symbols.phi_series(N);
    TruncatedSeries col = symbols.weight_series(ws, N);
    std::vector<Complex> cols(k * N);
    for (std::size_t n = 0; n < k; ++n) {
      for (std::size_t m = 0; m < N; ++m)
        cols[n * N + m] = col[m] * (sg[n] / sg[m]);
      if (n + 1 < k) col = mul(col, phi);
    }
    std::vector<Complex> gram(k * k, Complex{});
    for (std::size_t m = 0; m < N; ++m)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          gram[i * k + j] += std::conj(cols[i * N + m]) * cols[j * N + m];
    out.isometry = gram_defect(gram, k);
  }

  {
    // Co-isometry block: first k coefficients of every column. Truncated
    // products are lower triangular in the coefficient index, so chaining
    // at length k reproduces the full computation exactly.
    const std::size_t kk = std::min(k, N);
    const TruncatedSeries phik = symbols.phi_series(kk);
    TruncatedSeries col = symbols.weight_series(ws, kk);
    std::vector<Complex> scaled(kk);
    std::vector<Complex> gram(k * k, Complex{});
    for (std::size_t n = 0; n < N; ++n) {
      for (std::size_t m = 0; m < kk; ++m)
        scaled[m] = col[m] * (sg[n] / sg[m]);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          gram[i * k + j] += scaled[i] * std::conj(scaled[j]);
      if (n + 1 < N) col = mul(col, phik);
    }
    out.coisometry = gram_defect(gram, k);
  }
  return out;
}

double adjoint_kernel_defect(const WeightSequence& ws, const WCOSymbols& symbols,
                             Complex w, std::size_t N, std::size_t k) {
  if (k == 0) throw std::invalid_argument("adjoint_kernel_defect: k must be >= 1");
  check_build_args(ws, N, k, kDefaultMaxMatrixDim, "adjoint_kernel_defect");
  if (!(std::abs(w) < 1.0))
    throw std::domain_error("adjoint_kernel_defect: |w| must be < 1");

  const std::vector<double> sg = sqrt_gammas(ws, N);
  const TruncatedSeries F = symbols.weight_series(ws, N);
  const TruncatedSeries phi = symbols.phi_series(N);
  const KernelSection kw = kernel_vector(ws, w, N);

  const Complex fw = evaluate(F, w);
  const Complex pw = symbols.phi_at(w);
  const KernelSection kpw = kernel_vector(ws, pw, N);

  double s = 0.0;
  TruncatedSeries col = F;
  for (std::size_t n = 0; n < k; ++n) {
    Complex v{};
    for (std::size_t m = 0; m < N; ++m)
      v += std::conj(col[m] * (sg[n] / sg[m])) * kw.coords[m];
    const Complex target = std::conj(fw) * kpw.coords[n];
    s += std::norm(v - target);
    if (n + 1 < k) col = mul(col, phi);
  }
  return std::sqrt(s) / kernel_norm(ws, w, N);
}

double functional_identity_defect(const WeightSequence& ws, const WCOSymbols& symbols,
                                  std::span<const std::pair<Complex, Complex>> pairs,
                                  std::size_t N) {
  if (pairs.empty())
    throw std::invalid_argument("functional_identity_defect: empty grid");
  const TruncatedSeries F = symbols.weight_series(ws, N);
  double worst = 0.0;
  for (const auto& [z, w] : pairs) {
    const Complex fz = evaluate(F, z);
    const Complex fw = evaluate(F, w);
    const Complex pz = symbols.phi_at(z);
    const Complex pw = symbols.phi_at(w);
    const Complex lhs = fz * std::conj(fw) * kernel_value(ws, pw, pz, N).value;
    const Complex rhs = kernel_value(ws, w, z, N).value;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return worst;
}

double modulus_identity_defect(const WeightSequence& ws, const WCOSymbols& symbols,
                               std::span<const Complex> zs, std::size_t N) {
  if (zs.empty())
    throw std::invalid_argument("modulus_identity_defect: empty grid");
  const TruncatedSeries F = symbols.weight_series(ws, N);
  double worst = 0.0;
  for (const Complex& z : zs) {
    const Complex pz = symbols.phi_at(z);
    const double lhs =
        std::norm(evaluate(F, z)) * kernel_value(ws, pz, pz, N).value.real();
    const double rhs = kernel_value(ws, z, z, N).value.real();
    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
  }
  return worst;
}

SquaredPair square_rotated_pair(const TruncatedSeries& F, Complex lambda, Complex a,
                               Complex tau, std::size_t N) {
  if (std::abs(std::abs(tau) - 1.0) > 1e-12)
    throw std::invalid_argument("square_rotated_pair: tau must be unimodular");
  tau /= std::abs(tau);
  const Complex tbar = std::conj(tau);

  const Automorphism rotated(tau * lambda, tbar * a);
  const Automorphism squared = compose(rotated, rotated);

  const TruncatedSeries fN = resized(F, N);
  const TruncatedSeries first = rotate_argument(fN, tau);
  const Automorphism inner(tau * tau * lambda, tbar * a);
  const TruncatedSeries second = apply_polynomial(fN, inner.taylor(N), N);

  return SquaredPair{mul(first, second), squared.lambda(), squared.a(),
                           squared};
}

std::vector<Complex> default_check_grid() {
  std::vector<Complex> pts;
  pts.reserve(25);
  for (int ir = 1; ir <= 5; ++ir)
    for (int ia = 0; ia < 5; ++ia)
      pts.push_back(std::polar(0.1 * ir, 2.0 * std::numbers::pi * ia / 5.0));
  return pts;
}

std::vector<std::pair<Complex, Complex>> all_pairs(std::span<const Complex> points) {
  std::vector<std::pair<Complex, Complex>> out;
  out.reserve(points.size() * points.size());
  for (const Complex& z : points)
    for (const Complex& w : points) out.emplace_back(z, w);
  return out;
}

}  // namespace wcolab
