#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>

#include "wcolab/kernel.hpp"
#include "wcolab/moebius.hpp"
#include "wcolab/series.hpp"
#include "wcolab/weights.hpp"

namespace wcolab {

/// Symbol pair (F, phi) of the weighted composition operator
/// f -> F (f o phi). The weight is either an explicit coefficient list
/// (read as an exact polynomial when padded) or a descriptor resolved
/// against a weight sequence at materialization time, so N-doubling rebuilds
/// it instead of padding zeros. phi is an automorphism or a general
/// truncated self-map with |phi(0)| < 1.
class WCOSymbols {
 public:
  WCOSymbols(TruncatedSeries weight, Automorphism phi);
  WCOSymbols(TruncatedSeries weight, TruncatedSeries phi);

  /// Weight nu K_a / ||K_a|| making the pair unitary on hgamma-class
  /// spaces; materialization throws on any other space class.
  static WCOSymbols canonical_unitary(Automorphism phi, Complex nu = Complex{1.0, 0.0});

  /// Weight forced by the co-isometry identities on an arbitrary space
  /// (best effort: the resulting pair need not be co-isometric).
  static WCOSymbols forced(Automorphism phi);

  static WCOSymbols constant_weight(Complex c, Automorphism phi);

  TruncatedSeries weight_series(const WeightSequence& ws, std::size_t N) const;
  Complex weight_at(const WeightSequence& ws, Complex z, std::size_t N) const;

  TruncatedSeries phi_series(std::size_t N) const;
  Complex phi_at(Complex z) const;
  Complex phi0() const;

  const Automorphism* automorphism() const;
  const TruncatedSeries* phi_raw_series() const;

  std::string describe_weight() const;
  std::string describe_phi() const;

 private:
  struct CanonicalTag { Complex nu; };
  struct ForcedTag {};
  using WeightSpec = std::variant<TruncatedSeries, CanonicalTag, ForcedTag>;

  WCOSymbols(WeightSpec w, std::variant<Automorphism, TruncatedSeries> p);

  WeightSpec weight_;
  std::variant<Automorphism, TruncatedSeries> phi_;
};

/// Dense matrix of the operator in the orthonormal basis e_n = sqrt(gamma(n)) z^n:
/// A[m][n] = (m-th coefficient of F phi^n) sqrt(gamma(n)) / sqrt(gamma(m)),
/// truncated to N x N.
class OperatorMatrix {
 public:
  OperatorMatrix(std::size_t dim, std::string provenance);

  std::size_t dim() const { return dim_; }
  Complex at(std::size_t row, std::size_t col) const { return a_[row * dim_ + col]; }
  Complex& entry(std::size_t row, std::size_t col) { return a_[row * dim_ + col]; }
  const std::string& provenance() const { return prov_; }

 private:
  std::size_t dim_;
  std::vector<Complex> a_;
  std::string prov_;
};

/// Hard cap on the matrix dimension; the CLI maps WCOLAB_MAX_N onto it.
inline constexpr std::size_t kDefaultMaxMatrixDim = 2048;

/// Columns are built by iterated truncated multiplication (column n holds
/// the coefficients of F phi^n); columns are independent, so the loop could
/// run in parallel. Requires ws materialized through N-1; throws
/// std::length_error when N exceeds max_dim.
OperatorMatrix build_matrix(const WeightSequence& ws, const WCOSymbols& symbols,
                            std::size_t N,
                            std::size_t max_dim = kDefaultMaxMatrixDim);

/// Frobenius norm of the top-left k x k block of (A^* A - I).
double isometry_defect(const OperatorMatrix& A, std::size_t k);

/// Frobenius norm of the top-left k x k block of (A A^* - I).
double coisometry_defect(const OperatorMatrix& A, std::size_t k);

struct BlockDefects {
  double isometry = 0.0;
  double coisometry = 0.0;
};

/// Both block defects without materializing the N x N matrix: the isometry
/// block needs only the first k columns at full height and the coisometry
/// block only the first k coefficients of every column (truncated products
/// are lower triangular in the coefficient index). Matches the
/// OperatorMatrix route up to summation rounding.
BlockDefects block_defects(const WeightSequence& ws, const WCOSymbols& symbols,
                           std::size_t N, std::size_t k,
                           std::size_t max_dim = kDefaultMaxMatrixDim);

/// Residual of the adjoint identity on kernel vectors,
/// || A^* k_w - conj(F(w)) k_{phi(w)} || restricted to the first k
/// coordinates and divided by ||k_w||. Holds for every bounded pair of
/// symbols, co-isometric or not.
double adjoint_kernel_defect(const WeightSequence& ws, const WCOSymbols& symbols,
                             Complex w, std::size_t N, std::size_t k);

/// max over the (z, w) pairs of
/// |F(z) conj(F(w)) K_{phi(w)}(phi(z)) - K_w(z)| / |K_w(z)|; zero exactly
/// for co-isometric symbols.
double functional_identity_defect(const WeightSequence& ws, const WCOSymbols& symbols,
                                  std::span<const std::pair<Complex, Complex>> pairs,
                                  std::size_t N);

/// max over the grid of | |F(z)|^2 K_{phi(z)}(phi(z)) - K_z(z) | / K_z(z),
/// the diagonal (z = w) case of the functional identity.
double modulus_identity_defect(const WeightSequence& ws, const WCOSymbols& symbols,
                               std::span<const Complex> zs, std::size_t N);

/// Squaring construction: given a weight F for phi_{lambda,a} and a
/// unimodular tau, the square of the rotated pair is again a weighted
/// composition pair (G, phi_{mu,c}) with
///     G(z) = F(tau z) F(phi_{tau^2 lambda, conj(tau) a}(z))
/// and (mu, c) the canonical parameters of the squared automorphism; c
/// agrees with moved_center(lambda, a, tau). The composition is realized as
/// sum_j F_j psi^j, which converges since psi is an automorphism expansion.
struct SquaredPair {
  TruncatedSeries weight;
  Complex mu;
  Complex c;
  Automorphism squared_map;
};

SquaredPair square_rotated_pair(const TruncatedSeries& F, Complex lambda, Complex a,
                               Complex tau, std::size_t N);

/// Default evaluation grid for the pointwise identities: radii 0.1..0.5
/// times five equally spaced angles (25 points).
std::vector<Complex> default_check_grid();

/// All ordered (z, w) pairs over a point set.
std::vector<std::pair<Complex, Complex>> all_pairs(std::span<const Complex> points);

/// Measured defects of one symbol pair on one space, with the knobs that
/// produced them. Defects are NaN when the corresponding check could not
/// run (serialized as null).
struct CheckReport {
  double isometry = 0.0;
  double coisometry = 0.0;
  double adjoint_kernel = 0.0;
  double functional_identity = 0.0;
  double modulus_identity = 0.0;
  std::size_t N = 0;
  std::size_t k = 0;
  std::map<std::string, double> tolerances;
};

}  // namespace wcolab
