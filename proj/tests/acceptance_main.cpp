// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion pins its tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wcolab/kernel.hpp"
#include "wcolab/moebius.hpp"
#include "wcolab/verdict.hpp"
#include "wcolab/wco.hpp"
#include "wcolab/weights.hpp"

using namespace wcolab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  Outcome outcome(const std::string& extra = "") const {
    Outcome o;
    o.pass = failed_ == 0;
    std::ostringstream os;
    os << total_ - failed_ << "/" << total_ << " checks";
    if (!extra.empty()) os << "; " << extra;
    if (failed_ > 0) os << "; first failure: " << first_failure_;
    o.detail = os.str();
    return o;
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double lgamma_closed_form(double gamma1, std::size_t n) {
  return std::exp(std::lgamma(double(n) + gamma1) - std::lgamma(gamma1) -
                  std::lgamma(double(n) + 1.0));
}

Complex random_point(std::mt19937& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> r(rmin, rmax);
  std::uniform_real_distribution<double> t(0.0, 2.0 * std::numbers::pi);
  return std::polar(r(rng), t(rng));
}

// ---------------------------------------------------------------------------
// 1. The unitary family exists exactly where predicted: canonical weights
//    over automorphisms on the recurrence-scale spaces give block defects
//    below 1e-8 at (N=256, k=16) that do not grow at N=512.
Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  Check c;
  double worst = 0.0;
  for (double g : {0.5, 1.0, 2.0, 3.0}) {
    WeightSequence ws = WeightSequence::hgamma(g, 512);
    for (const Complex a : {Complex{0.3, 0.0}, Complex{0.0, 0.6}}) {
      for (const Complex lam : {Complex{1.0, 0.0}, Complex{0.0, 1.0}}) {
        const WCOSymbols sym = WCOSymbols::canonical_unitary(
            Automorphism(lam, a), Complex{1.0, 0.0});
        const BlockDefects d1 = block_defects(ws, sym, 256, 16);
        const BlockDefects d2 = block_defects(ws, sym, 512, 16);
        std::ostringstream tag;
        tag << "g=" << g << " a=" << a << " lam=" << lam;
        c.require(d1.isometry < 1e-8, "isometry defect at 256 " + tag.str());
        c.require(d1.coisometry < 1e-8, "coisometry defect at 256 " + tag.str());
        c.require(d2.isometry <= d1.isometry,
                  "isometry defect grew at 512 " + tag.str());
        c.require(d2.coisometry <= d1.coisometry,
                  "coisometry defect grew at 512 " + tag.str());
        worst = std::max({worst, d1.isometry, d1.coisometry});
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(secs < 10.0, "runtime " + fmt(secs) + "s exceeds 10s");
  std::ostringstream extra;
  extra << "worst defect " << fmt(worst) << ", " << fmt(secs) << "s";
  return c.outcome(extra.str());
}

// ---------------------------------------------------------------------------
// 2. Off the recurrence scale the best-effort weight fails stably while the
//    trivial rotation/constant pair is exactly unitary.
Outcome criterion2() {
  Check c;
  const Automorphism aut(Complex{1.0, 0.0}, Complex{0.5, 0.0});
  double smallest = 1e300;
  for (int which = 0; which < 2; ++which) {
    WeightSequence ws = which == 0 ? WeightSequence::dirichlet_classical(512)
                                   : WeightSequence::bounded_log(512);
    const WCOSymbols sym = WCOSymbols::forced(aut);
    double lo = 1e300, hi = 0.0;
    for (std::size_t n : {std::size_t(128), std::size_t(256), std::size_t(512)}) {
      const double d = block_defects(ws, sym, n, 16).coisometry;
      c.require(d > 1e-2, ws.describe() + ": coisometry defect " + fmt(d) +
                              " at N=" + std::to_string(n) + " not > 1e-2");
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    c.require(hi <= 2.0 * lo, ws.describe() + ": defect drifts beyond factor 2 (" +
                                  fmt(lo) + ".." + fmt(hi) + ")");
    smallest = std::min(smallest, lo);

    const WCOSymbols trivial = WCOSymbols::constant_weight(
        Complex{0.0, 1.0}, Automorphism::rotation(Complex{0.0, 1.0}));
    const BlockDefects d = block_defects(ws, trivial, 256, 16);
    c.require(d.isometry == 0.0, ws.describe() + ": rotation isometry defect nonzero");
    c.require(d.coisometry == 0.0,
              ws.describe() + ": rotation coisometry defect nonzero");
  }
  return c.outcome("smallest failing defect " + fmt(smallest));
}

// ---------------------------------------------------------------------------
// 3. The recurrence weights match the log-Gamma closed form and drive the
//    classification; the dirichlet weights break the recurrence at n = 1
//    with relative gap 1/8.
Outcome criterion3() {
  Check c;
  for (double g1 : {0.25, 1.0, 2.0, 3.7}) {
    const WeightSequence ws = gamma_from_recurrence(g1, 61);
    double worst = 0.0;
    for (std::size_t n = 0; n <= 60; ++n) {
      const double want = lgamma_closed_form(g1, n);
      worst = std::max(worst, std::abs(ws.gamma(n) - want) / want);
    }
    c.require(worst <= 1e-12,
              "gamma1=" + std::to_string(g1) + " closed-form gap " + fmt(worst));
    const SpaceClass cls = classify(ws, 50);
    c.require(cls.is_hgamma() && cls.gamma == g1,
              "classification failed for gamma1=" + std::to_string(g1));
  }
  const WeightSequence dir = WeightSequence::dirichlet_classical(61);
  c.require(!classify(dir, 50).is_hgamma(), "dirichlet wrongly classified");
  const double lhs = 2.0 * dir.gamma(2);                    // 2/3
  const double rhs = (1.0 + dir.gamma1()) * dir.gamma(1);   // 3/4
  const double gap = std::abs(lhs - rhs) / lhs;
  c.require(std::abs(gap - 0.125) < 1e-12,
            "first recurrence violation has gap " + fmt(gap) + ", want 0.125");
  return c.outcome("first dirichlet gap " + fmt(gap));
}

// ---------------------------------------------------------------------------
// 4. The adjoint identity on kernel vectors is unconditional: random
//    polynomial weights with affine self-maps on every named space.
Outcome criterion4() {
  Check c;
  std::mt19937 rng(20250809);
  std::uniform_real_distribution<double> coeff(-0.7, 0.7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<WeightSequence> spaces;
  spaces.push_back(WeightSequence::hardy(256));
  spaces.push_back(WeightSequence::bergman(0.5, 256));
  spaces.push_back(WeightSequence::hgamma(0.7, 256));
  spaces.push_back(WeightSequence::dirichlet_classical(256));
  spaces.push_back(WeightSequence::bounded_log(256));

  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const WeightSequence& ws = spaces[trial % spaces.size()];
    std::uniform_int_distribution<int> deg(1, 8);
    std::vector<Complex> fc(std::size_t(deg(rng)) + 1);
    for (Complex& x : fc) x = Complex{coeff(rng), coeff(rng)};
    if (std::abs(fc[0]) < 1e-3) fc[0] = Complex{0.5, 0.1};
    const double r1 = 0.05 + 0.80 * unit(rng);
    const double r2 = (0.9 - r1) * unit(rng);
    const Complex alpha = std::polar(r1, 2.0 * std::numbers::pi * unit(rng));
    const Complex beta = std::polar(r2, 2.0 * std::numbers::pi * unit(rng));
    const WCOSymbols sym(TruncatedSeries(fc), TruncatedSeries({beta, alpha}));
    const Complex w = random_point(rng, 0.0, 0.5);
    const double d = adjoint_kernel_defect(ws, sym, w, 256, 32);
    worst = std::max(worst, d);
    c.require(d < 1e-8, "case " + std::to_string(trial) + " on " + ws.describe() +
                            ": defect " + fmt(d));
  }
  return c.outcome("worst defect " + fmt(worst));
}

// ---------------------------------------------------------------------------
// 5. Pointwise identities: the functional and modulus identities hold on
//    every unitary-family case, and the power-sum identity separates the
//    recurrence scale from the dirichlet weights.
Outcome criterion5() {
  Check c;
  const std::vector<Complex> grid = default_check_grid();
  const auto pairs = all_pairs(grid);
  double worst = 0.0;
  for (double g : {0.5, 1.0, 2.0, 3.0}) {
    WeightSequence ws = WeightSequence::hgamma(g, 256);
    for (const Complex a : {Complex{0.3, 0.0}, Complex{0.0, 0.6}}) {
      for (const Complex lam : {Complex{1.0, 0.0}, Complex{0.0, 1.0}}) {
        const WCOSymbols sym =
            WCOSymbols::canonical_unitary(Automorphism(lam, a), Complex{1.0, 0.0});
        const double fd = functional_identity_defect(ws, sym, pairs, 256);
        const double md = modulus_identity_defect(ws, sym, grid, 256);
        std::ostringstream tag;
        tag << "g=" << g << " a=" << a << " lam=" << lam;
        c.require(fd < 1e-9, "functional identity " + fmt(fd) + " " + tag.str());
        c.require(md < 1e-9, "modulus identity " + fmt(md) + " " + tag.str());
        worst = std::max({worst, fd, md});
      }
    }
  }

  const double xs[] = {0.1, 0.3, 0.5, 0.8};
  for (double g : {0.5, 1.0, 2.0, 3.0}) {
    WeightSequence ws = WeightSequence::hgamma(g, 512);
    const double d = recurrence_sum_defect(ws, xs);
    c.require(d < 1e-12,
              "power-sum identity defect " + fmt(d) + " on hgamma " + fmt(g));
  }
  WeightSequence dir = WeightSequence::dirichlet_classical(512);
  const double xhalf[] = {0.5};
  const double dd = recurrence_sum_defect(dir, xhalf);
  c.require(dd > 1e-3, "power-sum defect " + fmt(dd) + " on dirichlet not > 1e-3");
  return c.outcome("worst grid defect " + fmt(worst));
}

// ---------------------------------------------------------------------------
// 6. Center moving end to end: the bisection hits every requested radius,
//    and squared pairs on the hardy space stay numerically co-isometric.
Outcome criterion6() {
  Check c;
  std::mt19937 rng(987654321);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_residual = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Complex lam = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
    const Complex a = random_point(rng, 0.05, 0.8);
    const double b = std::abs(a) * unit(rng);
    const Complex tau = find_tau_for_target_radius(lam, a, b);
    const double residual = std::abs(std::abs(moved_center(lam, a, tau)) - b);
    worst_residual = std::max(worst_residual, residual);
    c.require(residual < 1e-10,
              "trial " + std::to_string(trial) + ": residual " + fmt(residual));
  }

  WeightSequence hardy = WeightSequence::hardy(256);
  double worst_defect = 0.0;
  for (int seed = 0; seed < 10; ++seed) {
    const Complex lam = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
    const Complex a = random_point(rng, 0.1, 0.6);
    const Complex tau = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
    const TruncatedSeries F =
        canonical_weight(hardy, Automorphism(lam, a), Complex{1.0, 0.0}, 256);
    const SquaredPair res = square_rotated_pair(F, lam, a, tau, 256);
    const WCOSymbols squared(res.weight, res.squared_map);
    const double d = block_defects(hardy, squared, 256, 16).coisometry;
    worst_defect = std::max(worst_defect, d);
    c.require(d < 1e-6, "seed " + std::to_string(seed) + ": squared pair defect " +
                            fmt(d));
  }
  std::ostringstream extra;
  extra << "worst residual " << fmt(worst_residual) << ", worst squared defect "
        << fmt(worst_defect);
  return c.outcome(extra.str());
}

// ---------------------------------------------------------------------------
// 7. Basis facts: polynomials reproduce through the kernel pairing on every
//    named space, and rotation composition matrices are unitary to rounding.
Outcome criterion7() {
  Check c;
  std::mt19937 rng(424243);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  std::vector<WeightSequence> spaces;
  spaces.push_back(WeightSequence::hardy(64));
  spaces.push_back(WeightSequence::bergman(0.5, 64));
  spaces.push_back(WeightSequence::hgamma(0.7, 64));
  spaces.push_back(WeightSequence::dirichlet_classical(64));
  spaces.push_back(WeightSequence::bounded_log(64));

  double worst = 0.0;
  for (const WeightSequence& ws : spaces) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Complex> fc(11);
      for (Complex& x : fc) x = Complex{u(rng), u(rng)};
      const Complex w = random_point(rng, 0.0, 0.6);
      const double d = reproducing_check(ws, TruncatedSeries(fc), w, 64);
      worst = std::max(worst, d);
      c.require(d < 1e-13, ws.describe() + ": reproducing defect " + fmt(d));
    }
  }

  double worst_rot = 0.0;
  for (const double theta : {0.0, 0.5 * std::numbers::pi}) {
    WeightSequence ws = WeightSequence::bergman(0.0, 64);
    const WCOSymbols sym = WCOSymbols::constant_weight(
        Complex{1.0, 0.0}, Automorphism::rotation(std::polar(1.0, theta)));
    const OperatorMatrix A = build_matrix(ws, sym, 64);
    const double iso = isometry_defect(A, 64);
    const double coiso = coisometry_defect(A, 64);
    worst_rot = std::max({worst_rot, iso, coiso});
    c.require(iso < 1e-15, "rotation isometry defect " + fmt(iso));
    c.require(coiso < 1e-15, "rotation coisometry defect " + fmt(coiso));
  }
  std::ostringstream extra;
  extra << "worst reproducing defect " << fmt(worst) << ", worst rotation defect "
        << fmt(worst_rot);
  return c.outcome(extra.str());
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "unitary family on the recurrence scale", criterion1},
      {2, "no nontrivial co-isometries off the scale", criterion2},
      {3, "recurrence identification", criterion3},
      {4, "adjoint identity is unconditional", criterion4},
      {5, "pointwise and power-sum identities", criterion5},
      {6, "center moving end to end", criterion6},
      {7, "basis facts", criterion7},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s — %s\n", o.pass ? "PASS" : "FAIL", cr.id,
                cr.name.c_str(), o.detail.c_str());
  }
  std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
