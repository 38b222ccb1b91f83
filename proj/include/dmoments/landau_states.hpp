#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "dmoments/constants_units.hpp"
#include "dmoments/quadrature.hpp"

namespace dmoments {

// Principal number n and angular-momentum number k of a Landau state.
// Only k >= 0 is supported: every normalization below needs k + 1 > 0.
struct QuantumNumbers {
  int n = 0;
  int k = 0;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

void validate(const QuantumNumbers& qn);

/// Positive-energy eigenstate of the 2+1D Dirac equation in a constant
/// field B0 (symmetric gauge), with the dimensionless radial variable
/// rho = e B0 r^2 / 2.
///
/// Energies share one unit: eV for states built from a field, arbitrary
/// for states built directly from an energy scale (natural units).
/// N2_sq is normalized against the plane measure 2 pi d rho, i.e. it is the
/// physical N2^2 divided by e B0.
struct LandauState {
  QuantumNumbers qn;
  std::optional<double> B0_tesla;
  double m_e_c2 = 0.0;
  double scale = 0.0;  // sqrt(2 hbar c^2 e B0); scale^2 is "2 e B0"
  double E = 0.0;
  double epsilon = 0.0;  // kinetic energy E - m_e c^2
  double delta = 0.0;    // n + (k + 1) / 2
  double N1_over_N2 = 0.0;
  double N2_sq = 0.0;

  /// A = (k + 1)^2 scale^2 / epsilon^2.
  double normalization_weight() const { return N1_over_N2 * N1_over_N2; }
};

struct Spinor2 {
  std::complex<double> chi;
  std::complex<double> phi;
};

/// E from E^2 = m^2 + scale^2 (n + k + 1), field given in tesla.
double energy(const QuantumNumbers& qn, double B0_tesla,
              double m_e_c2_eV = units::codata2018.m_e_c2_eV);

/// Same spectrum with the energy scale supplied directly.
double energy_from_scale(const QuantumNumbers& qn, double scale, double mass);

/// Kinetic energy E - m computed without the cancellation of E - m.
double kinetic_energy_from_scale(const QuantumNumbers& qn, double scale,
                                 double mass);

LandauState build_state(const QuantumNumbers& qn, double B0_tesla,
                        double m_e_c2_eV = units::codata2018.m_e_c2_eV);

/// Builds a state from an energy scale and mass in any consistent unit.
/// With mass = 1 and scale = 1 this is the natural-unit case 2 e B0 = 1.
LandauState build_state_from_scale(const QuantumNumbers& qn, double scale,
                                   double mass);

/// N2^2 (plane measure 2 pi d rho) for weight A and exponent delta:
/// 1 / (2 pi Gamma(2 delta) (A + 2 delta)).
double normalization_n2_sq(double weight_A, double delta);

/// Full solution of the radial system, t in units of hbar / [energy unit].
///   chi = N1 e^{i k theta} rho^{k/2} e^{-rho/2} M(-n, k+1, rho)
///   phi = N2 e^{i (k+1) theta} rho^{(k+1)/2} e^{-rho/2} M(-n, k+2, rho)
Spinor2 spinor_exact(const LandauState& state, double rho, double theta,
                     double t = 0.0);

/// Large-rho form: N2 e^{-rho/2} (N1/N2 rho^{delta - 1/2}, e^{i theta} rho^delta)
/// times the common phase e^{-i(E t - k theta)}.
Spinor2 spinor_asymptotic(const LandauState& state, double rho, double theta,
                          double t = 0.0);

/// Integral of |chi|^2 + |phi|^2 of the asymptotic spinor over the plane,
/// by quadrature. Equals 1 for a correctly normalized state.
double norm_integral(const LandauState& state,
                     const QuadratureSettings& settings = {});

/// The coupled first-order radial system
///   [d/drho - k/(2 rho) - 1/2] F1 + (E + m)/(scale sqrt(rho)) F2 = 0
///   [d/drho + (k+1)/(2 rho) + 1/2] F2 - (E - m)/(scale sqrt(rho)) F1 = 0
/// together with its closed-form regular solution for a given energy. The
/// energy may be detuned away from the spectrum to probe the verifiers.
struct RadialProblem {
  QuantumNumbers qn;
  double mass = 0.0;
  double scale = 0.0;
  double energy = 0.0;
  double kinetic = 0.0;  // energy - mass, kept separately for precision
  double N2 = 1.0;

  static RadialProblem from_state(const LandauState& state);
  RadialProblem detuned(double relative_shift) const;

  double N1() const;
  /// Closed-form (F1, F2) and their rho-derivatives.
  std::pair<double, double> closed_form(double rho) const;
  std::pair<double, double> closed_form_derivative(double rho) const;
};

/// Residuals of both radial equations at rho for the closed-form solution,
/// each divided by the largest term of its line.
std::pair<double, double> radial_residual(const RadialProblem& problem,
                                          double rho);
std::pair<double, double> radial_residual(const LandauState& state,
                                          double rho);

inline constexpr double kOdeSeedRho = 1e-6;

struct RadialTrajectory {
  std::vector<double> rho;
  std::vector<double> F1;
  std::vector<double> F2;
  bool diverged = false;

  /// sqrt(F1^2 + F2^2) / (rho^delta e^{-rho/2}) at sample i.
  double normalized_magnitude(std::size_t i, double delta) const;
};

/// Fixed-step classical RK4 integration of the radial system from
/// rho0 = 1e-6 (seeded with the closed form) to rho_max. The integration
/// variable is x = sqrt(rho) with F1, F2 scaled by x^-k, which keeps the
/// regular singular point at the origin smooth; `step` is the step in x.
/// Overflow stops the integration and sets `diverged`.
RadialTrajectory integrate_radial_ode(const RadialProblem& problem,
                                      double rho_max, double step);

}  // namespace dmoments
