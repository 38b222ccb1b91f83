#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dmoments/error.hpp"
#include "dmoments/gordon_densities.hpp"
#include "dmoments/moments.hpp"

using namespace dmoments;
using namespace dmoments::gordon;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("density angular structure") {
  auto s = build_state({1, 1}, 1.0);
  auto q = densities(s, 2.0, kPi / 2);
  CHECK(std::abs(q.P01) < 1e-15 * std::abs(densities(s, 2.0, 0.0).P01));
  auto z = densities(s, 2.0, 0.0);
  CHECK(std::abs(z.P02) == 0.0);
  CHECK(z.P01.imag() == 0.0);
  // M0 carries no angle dependence
  CHECK(densities(s, 2.0, 1.3).M0 == z.M0);
  // 2 delta >= 1 for every valid state, so the origin is finite
  CHECK(std::isfinite(densities(s, 0.0, 0.0).M0));
  CHECK_THROWS_AS(densities(s, -1.0, 0.0), DomainError);
}

TEST_CASE("magnetization density terms balance where A = rho^2") {
  // M0 = N2^2 (A rho^{2 delta - 1} + rho^{2 delta + 1}) e^{-rho}; the two
  // terms are equal at rho = sqrt(A)
  auto s = build_state_from_scale({0, 0}, 1.0, 1.0);
  double A = s.normalization_weight();
  double rho = std::sqrt(A);
  double term = s.N2_sq * std::pow(rho, 2 * s.delta + 1) * std::exp(-rho);
  CHECK(rel(densities(s, rho, 0.0).M0, 2 * term) < 1e-14);
}

TEST_CASE("P01 scales with N1/N2") {
  auto src = DipoleSource::from_state(build_state({0, 2}, 1.0));
  auto doubled = src;
  doubled.N1_over_N2 *= 2;
  auto a = densities(src, 3.0, 0.2);
  auto b = densities(doubled, 3.0, 0.2);
  CHECK(rel(b.P01.real(), 2 * a.P01.real()) < 1e-15);
}

TEST_CASE("angular factors") {
  CHECK(angular_factor(AngularConvention::ConicalDeficit) == kConicalAngularFactor);
  CHECK(std::abs(angular_factor(AngularConvention::FullCircle)) < 1e-14);
}

TEST_CASE("polarization quadrature equals the closed form") {
  for (double B : {1e-7, 1e-2, 1.0, 1e8}) {
    for (int n : {0, 1, 3}) {
      for (int k : {0, 1, 4}) {
        auto s = build_state({n, k}, B);
        auto p = polarization_quadrature(s);
        auto c = moments::edm_closed({n, k}, B, s.epsilon);
        CHECK(rel(p.p1_ecm, c.value) < 1e-8);
        CHECK(p.p2_ecm.real() == 0.0);
        CHECK(p.p2_ecm.imag() == p.p1_ecm);
        auto full = polarization_quadrature(s, {}, AngularConvention::FullCircle);
        CHECK(std::abs(full.p1_ecm) <= 1e-14 * c.value);
      }
    }
  }
}

TEST_CASE("polarization with external kinetic energy") {
  auto src = DipoleSource::from_kinetic_energy({0, 0}, 1e-7, 2.6e5);
  auto p = polarization_quadrature(src);
  CHECK(rel(p.p1_ecm, 7.2057098626609622e-20) < 1e-8);
  CHECK_THROWS_AS(DipoleSource::from_kinetic_energy({0, 0}, 0.0, 1.0),
                  InvalidInputError);
  CHECK_THROWS_AS(DipoleSource::from_kinetic_energy({0, 0}, 1.0, -1.0),
                  InvalidInputError);
}

TEST_CASE("magnetization") {
  const double mu_B = units::codata2018.mu_B_J_per_T;
  auto low = build_state({0, 0}, 1e-10);
  CHECK(rel(magnetization_quadrature(low), mu_B) < 1e-6);
  CHECK(rel(magnetization_quadrature(low), 9.2740e-24) < 1e-5);

  // exact finite-field ratio; mpmath value at B = 1e12 T
  auto strong = build_state({0, 0}, 1e12);
  CHECK(rel(magnetization_quadrature(strong) / mu_B, 1.4765365045485994) < 1e-10);

  double prev_ratio = 0.0;
  for (double B : {1e-10, 1e-2, 1e4, 1e8, 1e10, 1e12}) {
    for (int n : {0, 2}) {
      for (int k : {0, 3}) {
        auto s = build_state({n, k}, B);
        double ratio = magnetization_quadrature(s) / mu_B;
        double exact = moments::mdm_finite_field({n, k}, B, s.epsilon).value / mu_B;
        CHECK(rel(ratio, exact) < 1e-10);
        CHECK(ratio > 1.0 - 1e-12);
        CHECK(ratio <= 2 * s.delta + 1);
      }
    }
    // fixed state family: ratio grows as A falls with B
    double r = magnetization_quadrature(build_state({0, 0}, B)) / mu_B;
    CHECK(r >= prev_ratio);
    prev_ratio = r;
  }
}

TEST_CASE("quadrature failure carries estimates") {
  QuadratureSettings tight;
  tight.rel_tol = 1e-14;
  tight.max_refinements = 2;
  try {
    integrate_radial([](double r) { return std::sin(40 * r) * std::exp(-r); }, 40.0, tight);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.previous_estimate()));
    CHECK(std::isfinite(e.last_estimate()));
    CHECK(e.previous_estimate() != e.last_estimate());
  }
  QuadratureSettings none;
  none.max_refinements = 0;
  CHECK_THROWS_AS(integrate_radial([](double) { return 1.0; }, 1.0, none),
                  InvalidInputError);
  QuadratureSettings bad;
  bad.rel_tol = 1e-3;
  CHECK_THROWS_AS(integrate_radial([](double) { return 1.0; }, 1.0, bad),
                  InvalidInputError);
}
