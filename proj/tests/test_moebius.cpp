#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

#include "wcolab/moebius.hpp"

using namespace wcolab;

namespace {

std::vector<Complex> disk_grid() {
  std::vector<Complex> pts;
  for (int ir = 1; ir <= 4; ++ir)
    for (int ia = 0; ia < 5; ++ia)
      pts.push_back(std::polar(0.16 * ir, 2.0 * std::numbers::pi * ia / 5.0 + 0.3));
  return pts;
}

Complex random_unimodular(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, u(rng));
}

Complex random_center(std::mt19937& rng, double rmax = 0.8) {
  std::uniform_real_distribution<double> r(0.05, rmax);
  std::uniform_real_distribution<double> t(0.0, 2.0 * std::numbers::pi);
  return std::polar(r(rng), t(rng));
}

}  // namespace

TEST_CASE("construction normalizes lambda and validates a") {
  const Automorphism f(Complex{2.0, 0.0}, Complex{0.3, 0.0});
  CHECK(f.lambda() == Complex{1.0, 0.0});
  CHECK_THROWS_AS(Automorphism(Complex{}, Complex{}), std::invalid_argument);
  CHECK_THROWS_AS(Automorphism(Complex{1, 0}, Complex{1.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Automorphism(Complex{1, 0}, Complex{0.8, 0.7}),
                  std::invalid_argument);
}

TEST_CASE("apply exchanges a and the origin") {
  const Complex a{0.4, 0.25};
  const Automorphism f(Complex{0.6, 0.8}, a);
  CHECK(f.apply(a) == Complex{});
  const Automorphism g(Complex{1, 0}, a);
  CHECK(g.apply(Complex{}) == a);
}

TEST_CASE("rotation convention") {
  const Automorphism rot = Automorphism::rotation(Complex{0, 1});
  CHECK(rot.is_rotation());
  CHECK(rot.rotation_multiplier() == Complex{0, 1});
  CHECK(rot.apply(Complex{0.5, 0}) == Complex{0, 0.5});
  const Automorphism id = Automorphism::identity();
  CHECK(id.lambda() == Complex{-1.0, 0.0});
  CHECK(id.apply(Complex{0.3, -0.2}) == Complex{0.3, -0.2});
}

TEST_CASE("derivative value and finite differences") {
  const Automorphism f(Complex{1, 0}, Complex{0.5, 0});
  CHECK(f.derivative_at(Complex{}) == Complex{-0.75, 0});

  std::mt19937 rng(17);
  const double h = 1e-6;
  for (int trial = 0; trial < 6; ++trial) {
    const Automorphism g(random_unimodular(rng), random_center(rng, 0.6));
    for (const Complex& z : disk_grid()) {
      const Complex fd =
          (g.apply(z + h) - g.apply(z - h)) / (2.0 * h);  // real-direction step
      const Complex d = g.derivative_at(z);
      CHECK(std::abs(fd - d) <= 1e-7 * std::abs(d));
    }
  }
}

TEST_CASE("taylor expansion") {
  SUBCASE("rotation") {
    const Complex lam{0.28, 0.96};
    const TruncatedSeries t = Automorphism(lam, Complex{}).taylor(5);
    CHECK(t[0] == Complex{});
    CHECK(t[1] == -lam / std::abs(lam));
    for (std::size_t n = 2; n < 5; ++n) CHECK(t[n] == Complex{});
  }
  SUBCASE("frozen leading coefficients") {
    const TruncatedSeries t = Automorphism(Complex{1, 0}, Complex{0.5, 0}).taylor(3);
    CHECK(t[0] == Complex{0.5, 0});
    CHECK(t[1] == Complex{-0.75, 0});
    CHECK(t[2] == Complex{-0.375, 0});
  }
  SUBCASE("agrees with apply inside the disk") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
      const Automorphism g(random_unimodular(rng), random_center(rng, 0.7));
      const TruncatedSeries t = g.taylor(64);
      const Complex z = std::polar(0.5, 1.1 + trial);
      CHECK(std::abs(evaluate(t, z) - g.apply(z)) < 1e-15);
    }
  }
}

TEST_CASE("composition and canonical parameters") {
  SUBCASE("the center exchange map is an involution") {
    const Complex a{0.35, -0.55};
    const Automorphism f(Complex{1, 0}, a);
    const Automorphism sq = compose(f, f);
    CHECK(sq.a() == Complex{});
    CHECK(sq.lambda() == Complex{-1.0, 0.0});  // canonical identity
  }
  SUBCASE("pre-rotation folds into the parameters") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 8; ++trial) {
      const Complex lam = random_unimodular(rng);
      const Complex a = random_center(rng);
      const Complex tau = random_unimodular(rng);
      const Automorphism combined =
          compose(Automorphism::rotation(tau), Automorphism(lam, a));
      CHECK(std::abs(combined.lambda() - tau * lam) < 1e-14);
      CHECK(std::abs(combined.a() - std::conj(tau) * a) < 1e-14);
    }
  }
  SUBCASE("composition agrees pointwise") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
      const Automorphism g(random_unimodular(rng), random_center(rng));
      const Automorphism f(random_unimodular(rng), random_center(rng));
      const Automorphism c = compose(g, f);
      for (const Complex& z : disk_grid())
        CHECK(std::abs(c.apply(z) - f.apply(g.apply(z))) < 1e-12);
    }
  }
}

TEST_CASE("inverse") {
  const Automorphism f(Complex{1, 0}, Complex{0.45, 0.1});
  const Automorphism inv = invert(f);
  CHECK(std::abs(inv.lambda() - f.lambda()) < 1e-14);  // involution
  CHECK(std::abs(inv.a() - f.a()) < 1e-14);

  std::mt19937 rng(37);
  for (int trial = 0; trial < 8; ++trial) {
    const Automorphism g(random_unimodular(rng), random_center(rng));
    const Automorphism round = compose(g, invert(g));
    CHECK(std::abs(round.lambda() - Complex{-1.0, 0.0}) < 1e-12);
    CHECK(std::abs(round.a()) < 1e-12);
    for (const Complex& z : disk_grid())
      CHECK(std::abs(invert(g).apply(g.apply(z)) - z) < 1e-12);
  }
}

TEST_CASE("moved_center") {
  std::mt19937 rng(41);
  SUBCASE("endpoints") {
    for (int trial = 0; trial < 6; ++trial) {
      const Complex lam = random_unimodular(rng);
      const Complex a = random_center(rng);
      CHECK(std::abs(moved_center(lam, a, std::conj(lam))) < 1e-15);
      const double top = 2.0 * std::abs(a) / (1.0 + std::norm(a));
      CHECK(std::abs(moved_center(lam, a, -std::conj(lam))) ==
            doctest::Approx(top).epsilon(1e-13));
    }
    CHECK(std::abs(moved_center(Complex{1, 0}, Complex{0.6, 0}, Complex{-1, 0})) ==
          doctest::Approx(0.8823529411764706).epsilon(1e-14));
  }
  SUBCASE("formula matches the zero of the composed square") {
    for (int trial = 0; trial < 12; ++trial) {
      const Complex lam = random_unimodular(rng);
      const Complex a = random_center(rng);
      const Complex tau = random_unimodular(rng);
      const Automorphism rotated(tau * lam, std::conj(tau) * a);
      const Automorphism sq = compose(rotated, rotated);
      CHECK(std::abs(sq.a() - moved_center(lam, a, tau)) < 1e-12);
    }
  }
  SUBCASE("radius never exceeds the far endpoint") {
    for (int trial = 0; trial < 20; ++trial) {
      const Complex lam = random_unimodular(rng);
      const Complex a = random_center(rng);
      const Complex tau = random_unimodular(rng);
      const double top = 2.0 * std::abs(a) / (1.0 + std::norm(a));
      CHECK(std::abs(moved_center(lam, a, tau)) <= top + 1e-12);
    }
  }
}

TEST_CASE("find_tau_for_target_radius") {
  SUBCASE("b = 0 returns conj(lambda) immediately") {
    const Complex lam = std::polar(1.0, 0.9);
    CHECK(find_tau_for_target_radius(lam, Complex{0.4, 0.1}, 0.0) == std::conj(lam));
  }
  SUBCASE("prescribed radii are hit") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
      const Complex lam = random_unimodular(rng);
      const Complex a = random_center(rng);
      std::uniform_real_distribution<double> ub(0.0, std::abs(a));
      const double b = ub(rng);
      const Complex tau = find_tau_for_target_radius(lam, a, b);
      CHECK(std::abs(std::abs(tau) - 1.0) < 1e-14);
      CHECK(std::abs(std::abs(moved_center(lam, a, tau)) - b) < 1e-10);
    }
  }
  SUBCASE("the full radius b = |a| is always reachable") {
    const Complex a{0.3, 0.4};
    const Complex tau = find_tau_for_target_radius(Complex{0, 1}, a, 0.5);
    CHECK(std::abs(std::abs(moved_center(Complex{0, 1}, a, tau)) - 0.5) < 1e-10);
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(find_tau_for_target_radius(Complex{1, 0}, Complex{0.6, 0}, 0.7),
                    std::domain_error);
    CHECK_THROWS_AS(find_tau_for_target_radius(Complex{1, 0}, Complex{0.6, 0}, -0.1),
                    std::domain_error);
    CHECK_THROWS_AS(find_tau_for_target_radius(Complex{1, 0}, Complex{}, 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("match_automorphism") {
  std::mt19937 rng(47);
  SUBCASE("round trip from taylor coefficients") {
    for (int trial = 0; trial < 8; ++trial) {
      const Automorphism g(random_unimodular(rng), random_center(rng, 0.7));
      const auto rec = match_automorphism(g.taylor(24), 1e-9);
      REQUIRE(rec.has_value());
      CHECK(std::abs(rec->lambda() - g.lambda()) < 1e-12);
      CHECK(std::abs(rec->a() - g.a()) < 1e-12);
    }
  }
  SUBCASE("rotations") {
    const auto rec = match_automorphism(Automorphism::rotation(Complex{0, 1}).taylor(8),
                                        1e-9);
    REQUIRE(rec.has_value());
    CHECK(rec->is_rotation());
    CHECK(rec->rotation_multiplier() == Complex{0, 1});
  }
  SUBCASE("rejects definite non-automorphisms") {
    CHECK(!match_automorphism(TruncatedSeries({{0.3, 0}, {0.5, 0}}), 1e-9));
    CHECK(!match_automorphism(TruncatedSeries({{0, 0}, {0.5, 0}}), 1e-9));
    TruncatedSeries doctored = Automorphism(Complex{1, 0}, Complex{0.4, 0}).taylor(12);
    doctored.coeff[7] += Complex{1e-6, 0};
    CHECK(!match_automorphism(doctored, 1e-9));
    CHECK(!match_automorphism(TruncatedSeries::constant(0.2, 1), 1e-9));
  }
}
