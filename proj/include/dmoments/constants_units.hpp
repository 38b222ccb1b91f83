#pragma once

#include <numbers>

namespace dmoments::units {

// CODATA 2018 values. hbar is derived from the exact Planck constant. The
// practical-unit entries are stored independently (not derived) so tests can
// check them against the SI set.
struct PhysicalConstants {
  double hbar;          // J s
  double c;             // m / s
  double e_charge;      // C
  double m_e;           // kg
  double m_e_c2_eV;     // eV
  double lambda_C_cm;   // reduced Compton wavelength hbar / (m_e c), cm
  double mu_B_J_per_T;  // Bohr magneton e hbar / (2 m_e), J / T
};

inline constexpr PhysicalConstants codata2018{
    .hbar = 6.62607015e-34 / (2.0 * std::numbers::pi),
    .c = 299792458.0,
    .e_charge = 1.602176634e-19,
    .m_e = 9.1093837015e-31,
    .m_e_c2_eV = 510998.95000,
    .lambda_C_cm = 3.8615926796e-11,
    .mu_B_J_per_T = 9.2740100783e-24,
};

inline constexpr double kTeslaPerGauss = 1e-4;

double tesla_from_gauss(double gauss);
double gauss_from_tesla(double tesla);

double ev_from_joule(double joule);
double joule_from_ev(double ev);

/// Relativistic Landau energy scale sqrt(2 hbar c^2 e B) expressed in eV.
/// This is the quantity written sqrt(2 e B0 hbar c) in the usual
/// natural-unit notation; scale^2 plays the role of 2eB0.
double magnetic_energy_scale_eV(double tesla);

/// Inverse of magnetic_energy_scale_eV.
double field_for_energy_scale(double scale_eV);

/// Converts a dipole moment measured in units of e * lambda_C into e cm.
double edm_natural_to_ecm(double p_over_e_lambda);

}  // namespace dmoments::units
