#include "wcolab/verdict.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wcolab {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct PhiShape {
  bool decided = false;              // false: too short to recover a candidate
  bool is_rotation = false;
  std::optional<Automorphism> aut;   // set iff recognized as an automorphism
};

PhiShape phi_shape(const WCOSymbols& symbols, double match_tol) {
  PhiShape shape;
  if (const Automorphism* aut = symbols.automorphism()) {
    shape.decided = true;
    shape.is_rotation = aut->is_rotation(match_tol);
    shape.aut = *aut;
    return shape;
  }
  const TruncatedSeries& raw = *symbols.phi_raw_series();
  if (raw.length() < 2) {
    // A bare constant: definitely not an automorphism, and not a rotation.
    if (std::abs(raw[0]) > match_tol) {
      shape.decided = true;
      return shape;
    }
    return shape;  // (0) is the start of any rotation: undecidable
  }
  shape.decided = true;
  shape.aut = match_automorphism(raw, match_tol);
  if (shape.aut) shape.is_rotation = shape.aut->is_rotation(match_tol);
  return shape;
}

bool weight_is_unimodular_constant(const TruncatedSeries& F, double match_tol) {
  if (std::abs(std::abs(F[0]) - 1.0) > match_tol) return false;
  for (std::size_t n = 1; n < F.length(); ++n)
    if (std::abs(F[n]) > match_tol) return false;
  return true;
}

// |F(z)| against |phi'(z)|^{gamma/2} on the default grid, relative.
bool weight_matches_derivative_power(const TruncatedSeries& F, const Automorphism& aut,
                                     double gamma, double match_tol) {
  for (const Complex& z : default_check_grid()) {
    const double want = std::pow(std::abs(aut.derivative_at(z)), 0.5 * gamma);
    const double got = std::abs(evaluate(F, z));
    if (std::abs(got - want) > match_tol * want) return false;
  }
  return true;
}

}  // namespace

std::string to_string(TheoreticalVerdict v) {
  switch (v) {
    case TheoreticalVerdict::UnitaryExpected: return "UnitaryExpected";
    case TheoreticalVerdict::TrivialOnlyViolated: return "TrivialOnlyViolated";
    case TheoreticalVerdict::NotCoisometricExpected: return "NotCoisometricExpected";
    case TheoreticalVerdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

std::string to_string(NumericalVerdict v) {
  switch (v) {
    case NumericalVerdict::PassUnitary: return "PassUnitary";
    case NumericalVerdict::FailCoisometry: return "FailCoisometry";
    case NumericalVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

TheoreticalVerdict theoretical_verdict(const WeightSequence& ws,
                                       const SpaceClass& space_class,
                                       const WCOSymbols& symbols, double match_tol) {
  if (space_class.kind == SpaceClass::Kind::Undetermined)
    return TheoreticalVerdict::Indeterminate;

  const PhiShape shape = phi_shape(symbols, match_tol);
  if (!shape.decided) return TheoreticalVerdict::Indeterminate;

  const std::size_t n_eval =
      std::min<std::size_t>(128, ws.max_index() + 1);
  TruncatedSeries F = TruncatedSeries::zero(1);
  try {
    F = symbols.weight_series(ws, n_eval);
  } catch (const std::exception&) {
    // Derived weight that cannot exist on this space (e.g. a canonical
    // weight requested off the hgamma scale): no shape to compare.
    return TheoreticalVerdict::Indeterminate;
  }

  if (space_class.is_hgamma()) {
    if (!shape.aut) return TheoreticalVerdict::NotCoisometricExpected;
    return weight_matches_derivative_power(F, *shape.aut, space_class.gamma, match_tol)
               ? TheoreticalVerdict::UnitaryExpected
               : TheoreticalVerdict::NotCoisometricExpected;
  }

  // Off the hgamma scale only the trivial pairs survive.
  return (shape.is_rotation && weight_is_unimodular_constant(F, match_tol))
             ? TheoreticalVerdict::UnitaryExpected
             : TheoreticalVerdict::NotCoisometricExpected;
}

NumericalAssessment numerical_assessment(WeightSequence ws, const WCOSymbols& symbols,
                                         std::size_t N, std::size_t k, double tol,
                                         std::size_t max_dim) {
  NumericalAssessment out;
  try {
    ws.materialize(2 * N);
  } catch (const std::out_of_range&) {
    if (ws.max_index() + 1 < 2 * N) {
      out.note = "cannot double N: weights end at n_max=" +
                 std::to_string(ws.max_index());
      return out;
    }
  }
  out.at_N = block_defects(ws, symbols, N, k, max_dim);
  out.at_2N = block_defects(ws, symbols, 2 * N, k, max_dim);

  const bool pass = out.at_N.isometry < tol && out.at_N.coisometry < tol &&
                    out.at_2N.isometry <= out.at_N.isometry &&
                    out.at_2N.coisometry <= out.at_N.coisometry;
  const bool fail =
      out.at_N.coisometry > 10.0 * tol && out.at_2N.coisometry > 10.0 * tol;
  if (pass)
    out.verdict = NumericalVerdict::PassUnitary;
  else if (fail)
    out.verdict = NumericalVerdict::FailCoisometry;
  return out;
}

NumericalVerdict numerical_verdict(WeightSequence ws, const WCOSymbols& symbols,
                                   std::size_t N, std::size_t k, double tol,
                                   std::size_t max_dim) {
  return numerical_assessment(std::move(ws), symbols, N, k, tol, max_dim).verdict;
}

double recurrence_sum_defect(const WeightSequence& ws, std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("recurrence_sum_defect: empty grid");
  const std::size_t m = ws.max_index();
  if (m < 2) throw std::invalid_argument("recurrence_sum_defect: too few weights");
  const double g1 = ws.gamma1();
  double worst = 0.0;
  for (double x : xs) {
    if (!(x > 0.0) || x > 0.8)
      throw std::domain_error("recurrence_sum_defect: grid points must lie in (0, 0.8]");
    const double x2 = x * x;
    double lhs = 0.0, rhs = 0.0, pw = x2;
    for (std::size_t n = 1; n < m; ++n) {
      lhs += ws.gamma(n) * (double(n) + g1) * pw;
      rhs += double(n + 1) * ws.gamma(n + 1) * pw;
      pw *= x2;
    }
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

DichotomyOutcome dichotomy_report(WeightSequence ws, const WCOSymbols& symbols,
                                  const DichotomyParams& params) {
  DichotomyOutcome out;
  out.report.N = params.N;
  out.report.k = params.k;
  out.report.tolerances = {{"block", params.tol},
                           {"match", params.match_tol},
                           {"classify_rel", params.classify_rel_tol}};
  out.report.isometry = kNan;
  out.report.coisometry = kNan;
  out.report.adjoint_kernel = kNan;
  out.report.functional_identity = kNan;
  out.report.modulus_identity = kNan;

  auto append_note = [&](const std::string& s) {
    if (!out.verdict.rationale.notes.empty()) out.verdict.rationale.notes += "; ";
    out.verdict.rationale.notes += s;
  };
  append_note("operator boundedness is assumed, not verified");

  try {
    ws.materialize(2 * params.N);
  } catch (const std::out_of_range&) {
    // explicit list: work with what is there
  }

  // Classification.
  if (ws.max_index() >= 3) {
    const std::size_t n_check =
        std::min(params.n_check, ws.max_index() - 1);
    out.space_class = classify(ws, std::max<std::size_t>(n_check, 2),
                               params.classify_rel_tol);
  } else {
    append_note("too few weights to classify");
  }
  out.verdict.rationale.space = ws.describe() + " [" + out.space_class.describe() + "]";
  out.verdict.rationale.phi = symbols.describe_phi();
  out.verdict.rationale.weight = symbols.describe_weight();

  // Shape-based prediction.
  try {
    out.verdict.theoretical =
        theoretical_verdict(ws, out.space_class, symbols, params.match_tol);
  } catch (const std::exception& e) {
    out.verdict.theoretical = TheoreticalVerdict::Indeterminate;
    append_note(std::string("theoretical check failed: ") + e.what());
  }

  // Block-defect assessment.
  try {
    const NumericalAssessment num = numerical_assessment(
        ws, symbols, params.N, params.k, params.tol, params.max_dim);
    out.verdict.numerical = num.verdict;
    out.report.isometry = num.at_N.isometry;
    out.report.coisometry = num.at_N.coisometry;
    if (!num.note.empty()) append_note(num.note);
  } catch (const std::exception& e) {
    out.verdict.numerical = NumericalVerdict::Inconclusive;
    append_note(std::string("block defects failed: ") + e.what());
  }

  // Pointwise identities.
  try {
    out.report.adjoint_kernel =
        adjoint_kernel_defect(ws, symbols, params.w_probe, params.N, params.k);
  } catch (const std::exception& e) {
    append_note(std::string("adjoint check failed: ") + e.what());
  }
  try {
    const std::vector<Complex> grid =
        params.grid.empty() ? default_check_grid() : params.grid;
    const auto pairs = all_pairs(grid);
    out.report.functional_identity =
        functional_identity_defect(ws, symbols, pairs, params.N);
    out.report.modulus_identity =
        modulus_identity_defect(ws, symbols, grid, params.N);
  } catch (const std::exception& e) {
    append_note(std::string("identity grid failed: ") + e.what());
  }

  if (out.verdict.theoretical == TheoreticalVerdict::Indeterminate) {
    out.verdict.agreement = std::nullopt;
  } else {
    const bool positive =
        out.verdict.theoretical == TheoreticalVerdict::UnitaryExpected &&
        out.verdict.numerical == NumericalVerdict::PassUnitary;
    const bool negative =
        (out.verdict.theoretical == TheoreticalVerdict::NotCoisometricExpected ||
         out.verdict.theoretical == TheoreticalVerdict::TrivialOnlyViolated) &&
        out.verdict.numerical == NumericalVerdict::FailCoisometry;
    out.verdict.agreement = positive || negative;
  }
  return out;
}

nlohmann::ordered_json report_json(const DichotomyOutcome& outcome,
                                   const std::string& space_text,
                                   const std::string& phi_text,
                                   const std::string& weight_text) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["space"] = {{"spec", space_text},
                {"class", outcome.space_class.kind_name()},
                {"gamma1", outcome.space_class.is_hgamma()
                               ? nlohmann::ordered_json(outcome.space_class.gamma)
                               : nlohmann::ordered_json(nullptr)}};
  j["symbols"] = {{"phi", phi_text}, {"weight", weight_text}};
  j["N"] = outcome.report.N;
  j["k"] = outcome.report.k;
  j["defects"] = {{"isometry", outcome.report.isometry},
                  {"coisometry", outcome.report.coisometry},
                  {"adjoint_kernel", outcome.report.adjoint_kernel},
                  {"functional_identity", outcome.report.functional_identity},
                  {"modulus_identity", outcome.report.modulus_identity}};
  j["theoretical"] = to_string(outcome.verdict.theoretical);
  j["numerical"] = to_string(outcome.verdict.numerical);
  if (outcome.verdict.agreement)
    j["agreement"] = *outcome.verdict.agreement;
  else
    j["agreement"] = "n/a";
  j["tolerances"] = outcome.report.tolerances;
  j["rationale"] = {{"space", outcome.verdict.rationale.space},
                    {"phi", outcome.verdict.rationale.phi},
                    {"weight", outcome.verdict.rationale.weight},
                    {"notes", outcome.verdict.rationale.notes}};
  return j;
}

}  // namespace wcolab
