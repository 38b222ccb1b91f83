#include "dmoments/constants_units.hpp"

#include <cmath>
#include <string>

#include "dmoments/error.hpp"

namespace dmoments::units {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidInputError(std::string(what) + " must be finite");
  }
}

// scale_eV^2 = kScaleSquaredPerTesla * B. Kept as one constant so that
// scale(4B) == 2 scale(B) holds bit for bit.
constexpr double kScaleSquaredPerTesla =
    2.0 * codata2018.hbar * codata2018.c * codata2018.c / codata2018.e_charge;

}  // namespace

double tesla_from_gauss(double gauss) {
  require_finite(gauss, "field in gauss");
  if (gauss < 0.0) throw InvalidInputError("field in gauss must be >= 0");
  return gauss * kTeslaPerGauss;
}

double gauss_from_tesla(double tesla) {
  require_finite(tesla, "field in tesla");
  return tesla / kTeslaPerGauss;
}

double ev_from_joule(double joule) {
  require_finite(joule, "energy in joule");
  return joule / codata2018.e_charge;
}

double joule_from_ev(double ev) {
  require_finite(ev, "energy in eV");
  return ev * codata2018.e_charge;
}

double magnetic_energy_scale_eV(double tesla) {
  require_finite(tesla, "magnetic field");
  if (tesla < 0.0) throw InvalidInputError("magnetic field must be >= 0");
  return std::sqrt(kScaleSquaredPerTesla * tesla);
}

double field_for_energy_scale(double scale_eV) {
  require_finite(scale_eV, "energy scale");
  if (scale_eV < 0.0) throw InvalidInputError("energy scale must be >= 0");
  return scale_eV * scale_eV / kScaleSquaredPerTesla;
}

double edm_natural_to_ecm(double p_over_e_lambda) {
  require_finite(p_over_e_lambda, "dipole moment");
  return p_over_e_lambda * codata2018.lambda_C_cm;
}

}  // namespace dmoments::units
