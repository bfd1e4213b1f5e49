#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wcolab {

/// Families with a known generating rule. Explicit covers user-supplied
/// finite lists, which carry no rule and no convergence certificate.
enum class SpaceFamily { Hardy, HGamma, Bergman, DirichletClassical, BoundedLog, Explicit };

/// What is known in closed form about sum_n gamma(n): convergence of that
/// series is exactly boundedness of the kernel on the diagonal.
enum class DiagonalSum { Convergent, Divergent, Unknown };

/// The positive sequence gamma(n) defining a weighted Hardy space on the
/// unit disk: the monomial z^n has norm gamma(n)^{-1/2}, so the reproducing
/// kernel is K_w(z) = sum_n gamma(n) (conj(w) z)^n. gamma(0) = 1 always
/// (the constant one has unit norm).
///
/// Values are immutable once materialized. materialize() extends the stored
/// range for rule-based families; do that before sharing across threads.
class WeightSequence {
 public:
  /// gamma(n) = 1: the classical Hardy-space weights.
  static WeightSequence hardy(std::size_t n_max);

  /// gamma(n) = gamma(n-1) (n-1+gamma1)/n, gamma(0) = 1; equivalently the
  /// Gamma-ratio closed form Gamma(n+gamma1) / (Gamma(gamma1) n!). These are
  /// the Taylor weights of the kernel (1 - conj(w) z)^(-gamma1).
  /// Requires gamma1 > 0.
  static WeightSequence hgamma(double gamma1, std::size_t n_max);

  /// Weighted Bergman space with exponent offset alpha >= 0: gamma(1) = alpha + 2.
  static WeightSequence bergman(double alpha, std::size_t n_max);

  /// gamma(n) = 1/(n+1): the renormed classical Dirichlet space. The
  /// diagonal sum diverges but the two-term recurrence fails, so this space
  /// sits outside the hgamma scale.
  static WeightSequence dirichlet_classical(std::size_t n_max);

  /// gamma(0) = gamma(1) = 1, gamma(n) = 1/(n(n-1)) for n >= 2. The diagonal
  /// sum telescopes to 3, so the kernel is bounded on the diagonal; the
  /// kernel has the closed form 1 + 2x - (1-x) log(1/(1-x)) in x = conj(w) z.
  static WeightSequence bounded_log(std::size_t n_max);

  /// Validated copy of an explicit list. Requires positive entries and
  /// gamma(0) = 1 (up to 1e-12, then snapped to exactly 1).
  static WeightSequence from_list(std::vector<double> gammas);

  double gamma(std::size_t n) const;
  double gamma1() const { return gamma(1); }

  /// ||z^n||, i.e. gamma(n)^{-1/2}.
  double monomial_norm(std::size_t n) const;
  /// Same value; the coefficient-weight convention beta(n) = ||z^n||.
  double beta(std::size_t n) const { return monomial_norm(n); }

  /// Largest index materialized so far.
  std::size_t max_index() const { return values_.size() - 1; }

  /// Extend the materialized range through index n_max. Throws
  /// std::out_of_range for explicit lists, which have no generating rule.
  void materialize(std::size_t n_max);

  SpaceFamily family() const { return family_; }
  /// gamma(1) for the recurrence families; unused otherwise.
  double family_param() const { return param_; }

  DiagonalSum diagonal_sum() const;
  /// Exact value of sum_n gamma(n) when the family knows it (bounded_log: 3).
  std::optional<double> diagonal_sum_value() const;

  /// Upper bound for gamma(n+1)/gamma(n) over all n >= from, when the family
  /// provides one. Lets kernel evaluation report a geometric tail bound.
  std::optional<double> tail_ratio_bound(std::size_t from) const;

  std::string describe() const;

 private:
  WeightSequence(SpaceFamily family, double param, std::vector<double> values);
  double next_term(std::size_t n) const;

  SpaceFamily family_;
  double param_;
  std::vector<double> values_;
};

/// Weights generated by the two-term recurrence with gamma(1) = gamma1;
/// identical to WeightSequence::hgamma.
WeightSequence gamma_from_recurrence(double gamma1, std::size_t n_max);

/// Diagnosis of a weight sequence: inside the hgamma scale, outside it with
/// a kernel bounded on the diagonal, outside it with unbounded kernel, or
/// not decidable from the available information.
struct SpaceClass {
  enum class Kind { HGamma, BoundedDiagonal, UnboundedOther, Undetermined };
  Kind kind = Kind::Undetermined;
  double gamma = 0.0;  // meaningful only when kind == HGamma

  bool is_hgamma() const { return kind == Kind::HGamma; }
  std::string describe() const;
  std::string kind_name() const;
};

/// Tests the recurrence (n+1) gamma(n+1) = (n+gamma(1)) gamma(n) for
/// 1 <= n <= n_check against the relative tolerance; on failure falls back
/// to the origin's convergence certificate, and to Undetermined when there
/// is none. Boundedness is never guessed from finitely many terms.
/// Requires n_check >= 2 and ws materialized through n_check + 1.
SpaceClass classify(const WeightSequence& ws, std::size_t n_check = 50,
                    double rel_tol = 1e-10);

}  // namespace wcolab
