#include "dmoments/moments.hpp"

#include <cmath>
#include <numbers>

#include "dmoments/constants_units.hpp"
#include "dmoments/error.hpp"
#include "dmoments/special_functions.hpp"

namespace dmoments::moments {
namespace {

using std::numbers::pi;

constexpr std::string_view kEcm = "e*cm";
constexpr std::string_view kJoulePerTesla = "J/T";

struct EdmInputs {
  double x;            // epsilon / scale
  double scale;
  double k1;           // k + 1
  double two_delta;    // 2n + k + 1
  double gamma_ratio;  // Gamma(2n + k + 3/2) / Gamma(2n + k + 1)
};

EdmInputs prepare(const QuantumNumbers& qn, double B0_tesla, double epsilon_eV) {
  validate(qn);
  if (!(B0_tesla > 0.0) || !std::isfinite(B0_tesla)) {
    throw InvalidInputError("magnetic field must be > 0");
  }
  if (!(epsilon_eV > 0.0) || !std::isfinite(epsilon_eV)) {
    throw InvalidInputError("kinetic energy must be > 0");
  }
  const double scale = units::magnetic_energy_scale_eV(B0_tesla);
  const double two_delta = 2.0 * qn.n + qn.k + 1.0;
  return {.x = epsilon_eV / scale,
          .scale = scale,
          .k1 = qn.k + 1.0,
          .two_delta = two_delta,
          .gamma_ratio = special::gamma_ratio(two_delta + 0.5, two_delta)};
}

double prefactor_ecm() { return units::codata2018.lambda_C_cm / (2.0 * pi); }

MomentResult make_result(double value, std::string_view unit, Method method,
                         const QuantumNumbers& qn, double B0, double eps,
                         const RegimeThresholds& thresholds) {
  return {.value = value,
          .unit = unit,
          .method = method,
          .regime = classify_regime(eps, B0, thresholds),
          .qn = qn,
          .B0_tesla = B0,
          .epsilon_eV = eps,
          .scale_eV = units::magnetic_energy_scale_eV(B0)};
}

// x (k+1) / ((k+1)^2 + x^2 2delta), arranged so neither x^2 nor 1/x^2
// overflows at extreme fields.
double shape(const EdmInputs& in) {
  if (in.x <= 1.0) {
    return in.x * in.k1 / (in.k1 * in.k1 + in.x * in.x * in.two_delta);
  }
  const double inv = 1.0 / in.x;
  return in.k1 * inv / (in.k1 * in.k1 * inv * inv + in.two_delta);
}

double edm_value(const QuantumNumbers& qn, double B0, double eps) {
  const auto in = prepare(qn, B0, eps);
  return prefactor_ecm() * in.gamma_ratio * shape(in);
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::Quadrature: return "quadrature";
    case Method::AsymptoticHigh: return "asymptotic_high";
    case Method::AsymptoticLow: return "asymptotic_low";
  }
  return "unknown";
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::HighKinetic: return "high_kinetic";
    case Regime::LowKinetic: return "low_kinetic";
    case Regime::Crossover: return "crossover";
  }
  return "unknown";
}

Regime classify_regime(double epsilon_eV, double B0_tesla,
                       const RegimeThresholds& thresholds) {
  if (!(thresholds.high_ratio > 1.0 && 1.0 > thresholds.low_ratio &&
        thresholds.low_ratio > 0.0)) {
    throw InvalidInputError("regime thresholds must satisfy high > 1 > low > 0");
  }
  if (!(epsilon_eV > 0.0) || !(B0_tesla > 0.0)) {
    throw InvalidInputError("regime classification needs positive inputs");
  }
  const double ratio = epsilon_eV / units::magnetic_energy_scale_eV(B0_tesla);
  if (ratio >= thresholds.high_ratio) return Regime::HighKinetic;
  if (ratio <= thresholds.low_ratio) return Regime::LowKinetic;
  return Regime::Crossover;
}

double mdm_closed() { return units::codata2018.mu_B_J_per_T; }

MomentResult mdm_finite_field(const QuantumNumbers& qn, double B0_tesla,
                              double epsilon_eV) {
  const auto in = prepare(qn, B0_tesla, epsilon_eV);
  // A / (A + 2delta) form with A = (k+1)^2 / x^2, rewritten in 1/A to stay
  // finite for tiny fields where A ~ 1e20.
  const double inv_weight = in.x * in.x / (in.k1 * in.k1);
  const double ratio = (1.0 + in.two_delta * (in.two_delta + 1.0) * inv_weight) /
                       (1.0 + in.two_delta * inv_weight);
  return make_result(mdm_closed() * ratio, kJoulePerTesla, Method::ClosedForm,
                     qn, B0_tesla, epsilon_eV, {});
}

MomentResult edm_closed(const QuantumNumbers& qn, double B0_tesla,
                        double epsilon_eV, const RegimeThresholds& thresholds) {
  return make_result(edm_value(qn, B0_tesla, epsilon_eV), kEcm,
                     Method::ClosedForm, qn, B0_tesla, epsilon_eV, thresholds);
}

MomentResult edm_asymptotic_high(const QuantumNumbers& qn, double B0_tesla,
                                 double epsilon_eV,
                                 const RegimeThresholds& thresholds) {
  const auto in = prepare(qn, B0_tesla, epsilon_eV);
  if (in.x < thresholds.high_ratio) {
    throw RegimeViolationError("high-kinetic form needs epsilon / scale >= " +
                               std::to_string(thresholds.high_ratio));
  }
  const double value =
      prefactor_ecm() * in.gamma_ratio * in.k1 / (in.x * in.two_delta);
  return make_result(value, kEcm, Method::AsymptoticHigh, qn, B0_tesla,
                     epsilon_eV, thresholds);
}

MomentResult edm_asymptotic_low(const QuantumNumbers& qn, double B0_tesla,
                                double epsilon_eV,
                                const RegimeThresholds& thresholds) {
  const auto in = prepare(qn, B0_tesla, epsilon_eV);
  if (in.x > thresholds.low_ratio) {
    throw RegimeViolationError("low-kinetic form needs epsilon / scale <= " +
                               std::to_string(thresholds.low_ratio));
  }
  const double value = prefactor_ecm() * in.gamma_ratio * in.x / in.k1;
  return make_result(value, kEcm, Method::AsymptoticLow, qn, B0_tesla,
                     epsilon_eV, thresholds);
}

double b_max(const QuantumNumbers& qn, double epsilon_eV) {
  validate(qn);
  if (!(epsilon_eV > 0.0) || !std::isfinite(epsilon_eV)) {
    throw InvalidInputError("kinetic energy must be > 0");
  }
  const double scale = epsilon_eV * std::sqrt(2.0 * qn.n + qn.k + 1.0) / (qn.k + 1.0);
  return units::field_for_energy_scale(scale);
}

double b_max_numeric(const QuantumNumbers& qn, double epsilon_eV,
                     double log_tolerance) {
  const double centre = std::log(b_max(qn, epsilon_eV));
  double lo = centre - std::log(100.0);
  double hi = centre + std::log(100.0);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double log_b) { return edm_value(qn, std::exp(log_b), epsilon_eV); };

  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = f(a);
  double fb = f(b);
  while (hi - lo > log_tolerance) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = f(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = f(a);
    }
  }
  return std::exp(0.5 * (lo + hi));
}

}  // namespace dmoments::moments
