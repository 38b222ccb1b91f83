#pragma once

#include <string_view>

#include "dmoments/landau_states.hpp"

namespace dmoments::moments {

enum class Method { ClosedForm, Quadrature, AsymptoticHigh, AsymptoticLow };
enum class Regime { HighKinetic, LowKinetic, Crossover };

std::string_view to_string(Method m);
std::string_view to_string(Regime r);

struct RegimeThresholds {
  double high_ratio = 10.0;
  double low_ratio = 0.1;
};

struct MomentResult {
  double value = 0.0;  // e cm for dipole moments, J/T for magnetic moments
  std::string_view unit;
  Method method = Method::ClosedForm;
  Regime regime = Regime::Crossover;
  QuantumNumbers qn;
  double B0_tesla = 0.0;
  double epsilon_eV = 0.0;
  double scale_eV = 0.0;
};

/// Classifies by epsilon / scale against the thresholds.
Regime classify_regime(double epsilon_eV, double B0_tesla,
                       const RegimeThresholds& thresholds = {});

/// e hbar / (2 m_e), the Bohr magneton in J/T.
double mdm_closed();

/// Closed form of the magnetization integral at finite field:
/// mu_B (A + 2 delta (2 delta + 1)) / (A + 2 delta).
MomentResult mdm_finite_field(const QuantumNumbers& qn, double B0_tesla,
                              double epsilon_eV);

/// Electric dipole moment p1 in e cm:
///
///   p1 = (lambda_C / 2 pi) x (k + 1) G / ((k + 1)^2 + x^2 (2n + k + 1))
///
/// with x = epsilon / scale and G = Gamma(2n + k + 3/2) / Gamma(2n + k + 1).
/// The second component is p2 = i p1, so |p2| = |p1| = value.
MomentResult edm_closed(const QuantumNumbers& qn, double B0_tesla,
                        double epsilon_eV,
                        const RegimeThresholds& thresholds = {});

/// Leading term for epsilon >> scale:
/// (lambda_C / 2 pi) (k + 1) G / (x (2n + k + 1)), growing like sqrt(B0).
/// The commonly quoted reduced form e lambda_C scale / epsilon drops the
/// 1 / (2 pi) and the Gamma ratio; both are kept here so the limit matches
/// edm_closed.
MomentResult edm_asymptotic_high(const QuantumNumbers& qn, double B0_tesla,
                                 double epsilon_eV,
                                 const RegimeThresholds& thresholds = {});

/// Leading term for epsilon << scale: (lambda_C / 2 pi) x G / (k + 1),
/// falling like 1 / sqrt(B0). Same caveat on the kept factors.
MomentResult edm_asymptotic_low(const QuantumNumbers& qn, double B0_tesla,
                                double epsilon_eV,
                                const RegimeThresholds& thresholds = {});

/// Field maximizing edm_closed at fixed epsilon, i.e. where
/// scale(B)^2 = epsilon^2 (2n + k + 1) / (k + 1)^2.
double b_max(const QuantumNumbers& qn, double epsilon_eV);

/// Golden-section search for the maximum of edm_closed over ln B within
/// [b_max / 100, 100 b_max]. Independent of the analytic b_max.
double b_max_numeric(const QuantumNumbers& qn, double epsilon_eV,
                     double log_tolerance = 1e-10);

}  // namespace dmoments::moments
