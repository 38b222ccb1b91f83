#pragma once

#include <functional>

namespace dmoments {

// Controls the radial integrals over [0, rho_max]. rho_max <= 0 selects
// the state-dependent default 20 * (2 delta + 2).
struct QuadratureSettings {
  double rho_max = 0.0;
  double rel_tol = 1e-10;
  int max_refinements = 20;
};

/// Default cut-off for integrands ~ rho^p exp(-rho) with p <= 2 delta + 1.
double default_rho_max(double delta);

/// Integrates f(rho) over [0, rho_max] with composite 10-point
/// Gauss-Legendre panels in t = sqrt(rho), doubling the panel count until
/// two successive estimates agree to rel_tol. The substitution removes the
/// half-integer power singularities at rho = 0.
///
/// Throws QuadratureError carrying the last two estimates when
/// max_refinements doublings are not enough.
double integrate_radial(const std::function<double(double)>& f,
                        double rho_max, const QuadratureSettings& settings);

}  // namespace dmoments
