#pragma once

#include <complex>

#include "dmoments/landau_states.hpp"
#include "dmoments/quadrature.hpp"

// Polarization and magnetization densities of the Gordon-decomposed Dirac
// current, built from the asymptotic spinor, and their plane integrals.
//
// For constant flat-space matrices only the polarization bilinear
// Psibar sigma^{l0} Psi and the magnetization bilinear Psibar sigma^{12} Psi
// survive; the commutator terms with derivatives of sigma or a spin
// connection vanish, and the convective current is not evaluated here.
//
// Units: densities are per d rho d theta. The polarization densities are in
// units of e * lambda_C, the magnetization density in units of the Bohr
// magneton; the 1 / (2 m_e) of the bilinears is absorbed into those units.
namespace dmoments::gordon {

// Parameters of the asymptotic spinor that enter the densities. Usually
// taken from a LandauState; from_kinetic_energy lets the kinetic energy be
// an external input (normalization recomputed with the same formula).
struct DipoleSource {
  QuantumNumbers qn;
  double scale = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  double N1_over_N2 = 0.0;
  double N2_sq = 0.0;

  static DipoleSource from_state(const LandauState& state);
  static DipoleSource from_kinetic_energy(const QuantumNumbers& qn,
                                          double B0_tesla, double epsilon_eV);

  double weight() const { return N1_over_N2 * N1_over_N2; }
};

struct DensityPoint {
  std::complex<double> P01;
  std::complex<double> P02;
  double M0 = 0.0;
  double rho = 0.0;
  double theta = 0.0;
};

enum class AngularConvention {
  // theta in [0, 2 pi) read as a conical deficit; effective factor 2
  ConicalDeficit,
  // ordinary full circle; the angular integral vanishes
  FullCircle,
};

/// Effective angular factor for the conical-deficit reading. With it the
/// radial integral reproduces the closed-form dipole moment including the
/// 1 / (2 pi) prefactor, since 2 pi N2^2 Gamma(2 delta) (A + 2 delta) = 1.
inline constexpr double kConicalAngularFactor = 2.0;

/// Angular integral of (e^{i theta} + e^{-i theta}) under the convention.
/// FullCircle is evaluated by symmetric periodic sampling.
double angular_factor(AngularConvention convention);

DensityPoint densities(const DipoleSource& source, double rho, double theta);
DensityPoint densities(const LandauState& state, double rho, double theta);

struct Polarization {
  double p1_ecm = 0.0;
  std::complex<double> p2_ecm;
};

Polarization polarization_quadrature(
    const DipoleSource& source, const QuadratureSettings& settings = {},
    AngularConvention convention = AngularConvention::ConicalDeficit);
Polarization polarization_quadrature(
    const LandauState& state, const QuadratureSettings& settings = {},
    AngularConvention convention = AngularConvention::ConicalDeficit);

/// Plane integral of M0 times the charge, in J/T.
double magnetization_quadrature(const DipoleSource& source,
                                const QuadratureSettings& settings = {});
double magnetization_quadrature(const LandauState& state,
                                const QuadratureSettings& settings = {});

}  // namespace dmoments::gordon
