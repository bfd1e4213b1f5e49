#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "wcolab/wco.hpp"
#include "wcolab/weights.hpp"

namespace wcolab {

/// What the structure of the space and symbols predicts about the pair
/// being co-isometric (equivalently unitary):
///  - UnitaryExpected: the symbols have exactly the shape that supports a
///    unitary pair on this space class.
///  - NotCoisometricExpected: the shape rules a co-isometry out.
///  - TrivialOnlyViolated: reserved refinement of the previous value for
///    spaces that only support rotation/constant pairs; not emitted by
///    theoretical_verdict, which reports NotCoisometricExpected there.
///  - Indeterminate: the space class is Undetermined, or phi is a raw
///    series too short to recover a candidate automorphism.
enum class TheoreticalVerdict {
  UnitaryExpected,
  TrivialOnlyViolated,
  NotCoisometricExpected,
  Indeterminate,
};

enum class NumericalVerdict { PassUnitary, FailCoisometry, Inconclusive };

std::string to_string(TheoreticalVerdict v);
std::string to_string(NumericalVerdict v);

struct Verdict {
  TheoreticalVerdict theoretical = TheoreticalVerdict::Indeterminate;
  NumericalVerdict numerical = NumericalVerdict::Inconclusive;
  /// true/false when the theoretical side is determinate, nullopt ("n/a")
  /// otherwise. Agreement means UnitaryExpected matched PassUnitary or
  /// NotCoisometricExpected matched FailCoisometry.
  std::optional<bool> agreement;
  struct Rationale {
    std::string space;
    std::string phi;
    std::string weight;
    std::string notes;
  } rationale;
};

/// Shape-based prediction. On hgamma-class spaces the pair is expected
/// unitary iff phi is an automorphism and |F| matches |phi'|^{gamma/2} on
/// the default grid within match_tol (any unimodular factor is free). On
/// the remaining determinate classes only rotation phi with unimodular
/// constant F qualifies. A raw series phi is matched against its candidate
/// automorphism; a definite mismatch counts as "not an automorphism".
TheoreticalVerdict theoretical_verdict(const WeightSequence& ws,
                                       const SpaceClass& space_class,
                                       const WCOSymbols& symbols,
                                       double match_tol = 1e-9);

/// Block defects at (N, k) and (2N, k).
struct NumericalAssessment {
  NumericalVerdict verdict = NumericalVerdict::Inconclusive;
  BlockDefects at_N;
  BlockDefects at_2N;
  std::string note;
};

/// PassUnitary: both defects below tol at N and not growing at 2N.
/// FailCoisometry: co-isometry defect above 10 tol at both N and 2N.
/// Anything else (including "cannot double N") is Inconclusive.
NumericalAssessment numerical_assessment(WeightSequence ws, const WCOSymbols& symbols,
                                         std::size_t N, std::size_t k, double tol,
                                         std::size_t max_dim = kDefaultMaxMatrixDim);

NumericalVerdict numerical_verdict(WeightSequence ws, const WCOSymbols& symbols,
                                   std::size_t N, std::size_t k, double tol,
                                   std::size_t max_dim = kDefaultMaxMatrixDim);

/// Relative gap between the two sums
///     sum_n gamma(n) (n + gamma(1)) x^{2n}  and  sum_n (n+1) gamma(n+1) x^{2n}
/// over the grid, truncated at the materialized length. The sums agree
/// termwise exactly when the weights satisfy the two-term recurrence, so
/// this gives a second, independent witness of membership in the
/// recurrence scale. Grid points must lie in (0, 0.8].
double recurrence_sum_defect(const WeightSequence& ws, std::span<const double> xs);

struct DichotomyParams {
  std::size_t N = 256;
  std::size_t k = 16;
  double tol = 1e-8;
  double match_tol = 1e-9;
  double classify_rel_tol = 1e-10;
  std::size_t n_check = 50;
  Complex w_probe = Complex{0.3, 0.0};
  std::size_t max_dim = kDefaultMaxMatrixDim;
  /// Evaluation points for the pointwise identities; empty selects the
  /// default tensor grid.
  std::vector<Complex> grid;
};

struct DichotomyOutcome {
  CheckReport report;
  Verdict verdict;
  SpaceClass space_class;
};

/// Runs the classification, the shape-based prediction, the block-defect
/// assessment and the pointwise identity defects, and reconciles them. A
/// failing constituent is recorded in the rationale and degrades the
/// verdict instead of throwing.
DichotomyOutcome dichotomy_report(WeightSequence ws, const WCOSymbols& symbols,
                                  const DichotomyParams& params = {});

/// Stable JSON form of an outcome (schema version 1). The caller supplies
/// the literals used to select space and symbols so reports are
/// reproducible from the command line.
nlohmann::ordered_json report_json(const DichotomyOutcome& outcome,
                                   const std::string& space_text,
                                   const std::string& phi_text,
                                   const std::string& weight_text);

}  // namespace wcolab
