#include "dmoments/gordon_densities.hpp"

#include <cmath>
#include <numbers>

#include "dmoments/constants_units.hpp"
#include "dmoments/error.hpp"

namespace dmoments::gordon {
namespace {

using std::numbers::pi;

constexpr int kAngularSamples = 64;

// rho^p e^{-rho}
double power_decay(double rho, double p) {
  if (rho == 0.0) return p == 0.0 ? 1.0 : 0.0;
  return std::exp(p * std::log(rho) - rho);
}

double resolve_rho_max(const DipoleSource& s, const QuadratureSettings& q) {
  return q.rho_max > 0.0 ? q.rho_max : default_rho_max(s.delta);
}

// prefactor of P01 and P02: N2^2 (k + 1) scale / (2 epsilon)
double polarization_prefactor(const DipoleSource& s) {
  return 0.5 * s.N2_sq * s.N1_over_N2;
}

}  // namespace

DipoleSource DipoleSource::from_state(const LandauState& state) {
  return {.qn = state.qn,
          .scale = state.scale,
          .epsilon = state.epsilon,
          .delta = state.delta,
          .N1_over_N2 = state.N1_over_N2,
          .N2_sq = state.N2_sq};
}

DipoleSource DipoleSource::from_kinetic_energy(const QuantumNumbers& qn,
                                               double B0_tesla,
                                               double epsilon_eV) {
  validate(qn);
  if (!(B0_tesla > 0.0) || !std::isfinite(B0_tesla)) {
    throw InvalidInputError("magnetic field must be > 0");
  }
  if (!(epsilon_eV > 0.0) || !std::isfinite(epsilon_eV)) {
    throw InvalidInputError("kinetic energy must be > 0");
  }
  DipoleSource s;
  s.qn = qn;
  s.scale = units::magnetic_energy_scale_eV(B0_tesla);
  s.epsilon = epsilon_eV;
  s.delta = qn.n + 0.5 * (qn.k + 1);
  s.N1_over_N2 = (qn.k + 1) * s.scale / epsilon_eV;
  s.N2_sq = normalization_n2_sq(s.weight(), s.delta);
  return s;
}

double angular_factor(AngularConvention convention) {
  if (convention == AngularConvention::ConicalDeficit) {
    return kConicalAngularFactor;
  }
  // Periodic trapezoid; each cos(theta_j) is paired with cos(theta_j + pi).
  const double h = 2.0 * pi / kAngularSamples;
  double sum = 0.0;
  for (int j = 0; j < kAngularSamples; ++j) {
    sum += 2.0 * std::cos(j * h);
  }
  return sum * h;
}

DensityPoint densities(const DipoleSource& s, double rho, double theta) {
  const double two_delta = 2.0 * s.delta;
  if (!(rho > 0.0) && !(rho == 0.0 && two_delta >= 1.0)) {
    throw DomainError("densities require rho > 0");
  }
  const double radial_p = polarization_prefactor(s) * power_decay(rho, two_delta - 0.5);
  const auto forward = std::polar(1.0, theta);
  const auto backward = std::conj(forward);
  DensityPoint d;
  d.rho = rho;
  d.theta = theta;
  d.P01 = radial_p * (forward + backward);
  d.P02 = radial_p * (forward - backward);
  d.M0 = s.N2_sq * (s.weight() * power_decay(rho, two_delta - 1.0) +
                    power_decay(rho, two_delta + 1.0));
  return d;
}

DensityPoint densities(const LandauState& state, double rho, double theta) {
  return densities(DipoleSource::from_state(state), rho, theta);
}

Polarization polarization_quadrature(const DipoleSource& s,
                                     const QuadratureSettings& settings,
                                     AngularConvention convention) {
  // theta-independent radial profile: P01(rho, 0) / 2
  auto radial = [&](double rho) { return 0.5 * densities(s, rho, 0.0).P01.real(); };
  const double radial_integral =
      integrate_radial(radial, resolve_rho_max(s, settings), settings);
  const double factor = angular_factor(convention);
  const double p1 = units::edm_natural_to_ecm(radial_integral * factor);
  return {.p1_ecm = p1, .p2_ecm = std::complex<double>(0.0, p1)};
}

Polarization polarization_quadrature(const LandauState& state,
                                     const QuadratureSettings& settings,
                                     AngularConvention convention) {
  return polarization_quadrature(DipoleSource::from_state(state), settings,
                                 convention);
}

double magnetization_quadrature(const DipoleSource& s,
                                const QuadratureSettings& settings) {
  auto radial = [&](double rho) { return densities(s, rho, 0.0).M0; };
  const double integral =
      integrate_radial(radial, resolve_rho_max(s, settings), settings);
  return units::codata2018.mu_B_J_per_T * 2.0 * pi * integral;
}

double magnetization_quadrature(const LandauState& state,
                                const QuadratureSettings& settings) {
  return magnetization_quadrature(DipoleSource::from_state(state), settings);
}

}  // namespace dmoments::gordon
