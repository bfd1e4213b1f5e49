#include "wcolab/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wcolab {

WeightSequence::WeightSequence(SpaceFamily family, double param,
                               std::vector<double> values)
    : family_(family), param_(param), values_(std::move(values)) {}

WeightSequence WeightSequence::hardy(std::size_t n_max) {
  WeightSequence ws(SpaceFamily::Hardy, 1.0, {1.0});
  ws.materialize(n_max);
  return ws;
}

WeightSequence WeightSequence::hgamma(double gamma1, std::size_t n_max) {
  if (!(gamma1 > 0.0))
    throw std::domain_error("hgamma: gamma1 must be positive");
  WeightSequence ws(SpaceFamily::HGamma, gamma1, {1.0});
  ws.materialize(n_max);
  return ws;
}

WeightSequence WeightSequence::bergman(double alpha, std::size_t n_max) {
  if (!(alpha >= 0.0))
    throw std::domain_error("bergman: alpha must be >= 0");
  WeightSequence ws(SpaceFamily::Bergman, alpha + 2.0, {1.0});
  ws.materialize(n_max);
  return ws;
}

WeightSequence WeightSequence::dirichlet_classical(std::size_t n_max) {
  WeightSequence ws(SpaceFamily::DirichletClassical, 0.0, {1.0});
  ws.materialize(n_max);
  return ws;
}

WeightSequence WeightSequence::bounded_log(std::size_t n_max) {
  WeightSequence ws(SpaceFamily::BoundedLog, 0.0, {1.0});
  ws.materialize(n_max);
  return ws;
}

WeightSequence WeightSequence::from_list(std::vector<double> gammas) {
  if (gammas.empty())
    throw std::invalid_argument("weight list: at least gamma(0) required");
  if (std::abs(gammas[0] - 1.0) > 1e-12)
    throw std::invalid_argument("weight list: gamma(0) must equal 1");
  gammas[0] = 1.0;
  for (std::size_t n = 0; n < gammas.size(); ++n)
    if (!(gammas[n] > 0.0) || !std::isfinite(gammas[n]))
      throw std::invalid_argument("weight list: gamma(" + std::to_string(n) +
                                  ") is not a positive finite number");
  return WeightSequence(SpaceFamily::Explicit, 0.0, std::move(gammas));
}

double WeightSequence::gamma(std::size_t n) const {
  if (n >= values_.size())
    throw std::out_of_range("WeightSequence: index " + std::to_string(n) +
                            " beyond materialized n_max=" +
                            std::to_string(max_index()));
  return values_[n];
}

double WeightSequence::monomial_norm(std::size_t n) const {
  return 1.0 / std::sqrt(gamma(n));
}

double WeightSequence::next_term(std::size_t n) const {
  switch (family_) {
    case SpaceFamily::Hardy:
    case SpaceFamily::HGamma:
    case SpaceFamily::Bergman:
      return values_[n - 1] * ((double(n) - 1.0 + param_) / double(n));
    case SpaceFamily::DirichletClassical:
      return 1.0 / double(n + 1);
    case SpaceFamily::BoundedLog:
      return n < 2 ? 1.0 : 1.0 / (double(n) * double(n - 1));
    case SpaceFamily::Explicit:
      break;
  }
  throw std::out_of_range("WeightSequence: explicit list has no rule beyond n_max=" +
                          std::to_string(max_index()));
}

void WeightSequence::materialize(std::size_t n_max) {
  if (n_max < values_.size()) return;
  if (family_ == SpaceFamily::Explicit)
    throw std::out_of_range("WeightSequence: explicit list has no rule beyond n_max=" +
                            std::to_string(max_index()));
  values_.reserve(n_max + 1);
  for (std::size_t n = values_.size(); n <= n_max; ++n)
    values_.push_back(next_term(n));
}

DiagonalSum WeightSequence::diagonal_sum() const {
  switch (family_) {
    case SpaceFamily::Hardy:
    case SpaceFamily::HGamma:
    case SpaceFamily::Bergman:
    case SpaceFamily::DirichletClassical:
      return DiagonalSum::Divergent;
    case SpaceFamily::BoundedLog:
      return DiagonalSum::Convergent;
    case SpaceFamily::Explicit:
      break;
  }
  return DiagonalSum::Unknown;
}

std::optional<double> WeightSequence::diagonal_sum_value() const {
  // 2 + sum_{n>=2} 1/(n(n-1)) telescopes to 3.
  if (family_ == SpaceFamily::BoundedLog) return 3.0;
  return std::nullopt;
}

std::optional<double> WeightSequence::tail_ratio_bound(std::size_t from) const {
  if (from == 0) from = 1;
  switch (family_) {
    case SpaceFamily::Hardy:
      return 1.0;
    case SpaceFamily::HGamma:
    case SpaceFamily::Bergman:
      // ratio (n+gamma1)/(n+1): below 1 when gamma1 <= 1, else decreasing in n.
      return param_ <= 1.0 ? 1.0
                           : (double(from) + param_) / (double(from) + 1.0);
    case SpaceFamily::DirichletClassical:
    case SpaceFamily::BoundedLog:
      return 1.0;  // both sequences are non-increasing from n = 1 on
    case SpaceFamily::Explicit:
      break;
  }
  return std::nullopt;
}

std::string WeightSequence::describe() const {
  std::ostringstream os;
  switch (family_) {
    case SpaceFamily::Hardy: os << "hardy"; break;
    case SpaceFamily::HGamma: os << "hgamma(gamma=" << param_ << ")"; break;
    case SpaceFamily::Bergman: os << "bergman(alpha=" << param_ - 2.0 << ")"; break;
    case SpaceFamily::DirichletClassical: os << "dirichlet"; break;
    case SpaceFamily::BoundedLog: os << "bounded-log"; break;
    case SpaceFamily::Explicit: os << "explicit(" << values_.size() << " terms)"; break;
  }
  return os.str();
}

WeightSequence gamma_from_recurrence(double gamma1, std::size_t n_max) {
  return WeightSequence::hgamma(gamma1, n_max);
}

std::string SpaceClass::kind_name() const {
  switch (kind) {
    case Kind::HGamma: return "HGamma";
    case Kind::BoundedDiagonal: return "BoundedDiagonal";
    case Kind::UnboundedOther: return "UnboundedOther";
    case Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string SpaceClass::describe() const {
  if (kind == Kind::HGamma) {
    std::ostringstream os;
    os << "HGamma(" << gamma << ")";
    return os.str();
  }
  return kind_name();
}

SpaceClass classify(const WeightSequence& ws, std::size_t n_check, double rel_tol) {
  if (n_check < 2)
    throw std::invalid_argument("classify: n_check must be >= 2");
  if (ws.max_index() < n_check + 1)
    throw std::invalid_argument("classify: materialize through n_check+1 first");

  const double g1 = ws.gamma1();
  bool recurrence_holds = true;
  for (std::size_t n = 1; n <= n_check; ++n) {
    const double lhs = double(n + 1) * ws.gamma(n + 1);
    const double rhs = (double(n) + g1) * ws.gamma(n);
    if (std::abs(lhs - rhs) > rel_tol * std::abs(lhs)) {
      recurrence_holds = false;
      break;
    }
  }
  if (recurrence_holds) return SpaceClass{SpaceClass::Kind::HGamma, g1};

  switch (ws.diagonal_sum()) {
    case DiagonalSum::Convergent:
      return SpaceClass{SpaceClass::Kind::BoundedDiagonal, 0.0};
    case DiagonalSum::Divergent:
      return SpaceClass{SpaceClass::Kind::UnboundedOther, 0.0};
    case DiagonalSum::Unknown:
      break;
  }
  return SpaceClass{SpaceClass::Kind::Undetermined, 0.0};
}

}  // namespace wcolab
