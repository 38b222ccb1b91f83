#include "dmoments/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "dmoments/error.hpp"

namespace dmoments {
namespace {

constexpr int kOrder = 10;
constexpr int kInitialPanels = 4;

struct GaussLegendreRule {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};
};

// Roots of P_10 by Newton iteration from the Chebyshev-like initial guess.
GaussLegendreRule make_rule() {
  GaussLegendreRule rule;
  for (int i = 0; i < kOrder; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= kOrder; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendreRule& rule() {
  static const GaussLegendreRule r = make_rule();
  return r;
}

double composite(const std::function<double(double)>& f, double t_max,
                 int panels) {
  const auto& r = rule();
  const double width = t_max / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    double panel = 0.0;
    for (int i = 0; i < kOrder; ++i) {
      const double t = mid + 0.5 * width * r.nodes[i];
      panel += r.weights[i] * f(t * t) * 2.0 * t;
    }
    total += 0.5 * width * panel;
  }
  return total;
}

}  // namespace

double default_rho_max(double delta) { return 20.0 * (2.0 * delta + 2.0); }

double integrate_radial(const std::function<double(double)>& f,
                        double rho_max, const QuadratureSettings& settings) {
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) {
    throw InvalidInputError("rho_max must be positive and finite");
  }
  if (!(settings.rel_tol >= 1e-14 && settings.rel_tol <= 1e-6)) {
    throw InvalidInputError("rel_tol must lie in [1e-14, 1e-6]");
  }
  if (settings.max_refinements < 1) {
    throw InvalidInputError("max_refinements must be >= 1");
  }
  const double t_max = std::sqrt(rho_max);
  int panels = kInitialPanels;
  double previous = composite(f, t_max, panels);
  double current = previous;
  for (int level = 0; level < settings.max_refinements; ++level) {
    panels *= 2;
    current = composite(f, t_max, panels);
    if (!std::isfinite(current)) break;
    if (std::abs(current - previous) <= settings.rel_tol * std::abs(current)) {
      return current;
    }
    if (level + 1 < settings.max_refinements) previous = current;
  }
  throw QuadratureError("radial quadrature did not converge after " +
                            std::to_string(settings.max_refinements) +
                            " refinements",
                        previous, current);
}

}  // namespace dmoments
