#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "dmoments/constants_units.hpp"
#include "dmoments/gordon_densities.hpp"
#include "dmoments/landau_states.hpp"
#include "dmoments/moments.hpp"
#include "dmoments/report.hpp"
#include "dmoments/special_functions.hpp"

namespace dmoments::report {
namespace {

// Tracks the worst observed value of some error measure against a bound.
class Tally {
 public:
  explicit Tally(double bound) : bound_(bound) {}

  void observe(double err, const std::string& where) {
    if (!(err <= bound_)) {
      if (ok_) first_failure_ = where;
      ok_ = false;
    }
    if (!(err <= worst_)) {
      worst_ = err;
      worst_at_ = where;
    }
  }
  void require(bool cond, const std::string& where) {
    if (!cond && ok_) {
      ok_ = false;
      first_failure_ = where;
    }
  }

  bool ok() const { return ok_; }
  std::string summary() const {
    std::ostringstream s;
    s << "worst " << worst_ << " (bound " << bound_ << ")";
    if (!ok_) s << ", first failure at " << first_failure_;
    return s.str();
  }

 private:
  double bound_;
  bool ok_ = true;
  double worst_ = 0.0;
  std::string worst_at_;
  std::string first_failure_;
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string label(const QuantumNumbers& qn, double B) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "n=%d k=%d B=%g", qn.n, qn.k, B);
  return buf;
}

constexpr double kGridFields[] = {1e-7, 1.0, 1e10};

template <class F>
void for_grid(F&& f) {
  for (double B : kGridFields) {
    for (int n = 0; n <= 20; ++n) {
      for (int k = 0; n + k <= 20; ++k) f(QuantumNumbers{n, k}, B);
    }
  }
}

CheckGroup special_functions_group() {
  Tally t(1e-12);
  t.observe(std::abs(special::ln_gamma(1.0)), "ln_gamma(1)");
  t.observe(std::abs(special::ln_gamma(0.5) - 0.5 * std::log(std::numbers::pi)),
            "ln_gamma(0.5)");
  t.observe(rel(special::ln_gamma(11.0), std::log(3628800.0)), "ln_gamma(11)");
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= 10; ++k) {
      for (double b : {k + 1.0, k + 2.0}) {
        for (double x = 0.0; x <= 50.0; x += 2.5) {
          const special::KummerParams p{-static_cast<double>(n), b, x};
          const double poly = special::kummer_1f1(p);
          const double series = special::kummer_1f1_series(p);
          t.observe(std::abs(poly - series) / std::max(std::abs(series), 1e-300),
                    "1F1 " + std::to_string(n) + "," + std::to_string(b));
        }
      }
    }
  }
  return {"special functions", t.ok(), t.summary()};
}

CheckGroup spectrum_group() {
  Tally t(1e-12);
  for_grid([&](QuantumNumbers qn, double B) {
    const auto s = build_state(qn, B);
    const double lam = qn.n + qn.k + 1.0;
    const double s2 = s.scale * s.scale;
    const double m2 = s.m_e_c2 * s.m_e_c2;
    t.observe(std::abs(s.E * s.E - m2 - s2 * lam) / (s.E * s.E), label(qn, B));
    t.observe(rel(s.epsilon * (s.E + s.m_e_c2), s2 * lam), label(qn, B));
    const double delta_alt = (s.epsilon * (s.E + s.m_e_c2) - 0.5 * (qn.k + 1) * s2) / s2;
    t.observe(rel(delta_alt, s.delta), "delta " + label(qn, B));
    if (qn.n > 0) {
      t.require(energy(qn, B) == energy({qn.n - 1, qn.k + 1}, B),
                "degeneracy " + label(qn, B));
    }
  });
  return {"spectrum identity", t.ok(), t.summary()};
}

CheckGroup normalization_group() {
  Tally t(1e-10);
  for_grid([&](QuantumNumbers qn, double B) {
    t.observe(std::abs(norm_integral(build_state(qn, B)) - 1.0), label(qn, B));
  });
  return {"normalization", t.ok(), t.summary()};
}

CheckGroup residual_group() {
  Tally t(1e-9);
  for_grid([&](QuantumNumbers qn, double B) {
    const auto s = build_state(qn, B);
    for (double rho : {0.1, 1.0, 5.0, 20.0}) {
      const auto [r1, r2] = radial_residual(s, rho);
      t.observe(std::max(std::abs(r1), std::abs(r2)), label(qn, B));
    }
  });
  return {"radial residuals", t.ok(), t.summary()};
}

double ode_error(const RadialProblem& p, double rho_max, double step) {
  const auto traj = integrate_radial_ode(p, rho_max, step);
  if (traj.diverged) return INFINITY;
  double err = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < traj.rho.size(); ++i) {
    const auto [f1, f2] = p.closed_form(traj.rho[i]);
    err = std::max({err, std::abs(traj.F1[i] - f1), std::abs(traj.F2[i] - f2)});
    scale = std::max({scale, std::abs(f1), std::abs(f2)});
  }
  return err / scale;
}

CheckGroup ode_group() {
  Tally t(1e-6);
  const QuantumNumbers cases[] = {{0, 0}, {1, 0}, {0, 2}, {3, 2}};
  for (auto qn : cases) {
    t.observe(ode_error(RadialProblem::from_state(build_state_from_scale(qn, 1.0, 1.0)),
                        30.0, 1e-3),
              "natural " + label(qn, 0));
  }
  t.observe(ode_error(RadialProblem::from_state(build_state({0, 0}, 1.0)), 30.0, 1e-3),
            "n=0 k=0 B=1");

  const auto state = build_state_from_scale({0, 0}, 1.0, 1.0);
  const auto detuned = RadialProblem::from_state(state).detuned(0.01);
  const auto traj = integrate_radial_ode(detuned, 50.0, 1e-3);
  bool grows = traj.diverged;
  if (!grows) {
    std::size_t i5 = 0;
    while (traj.rho[i5] < 5.0) ++i5;
    grows = traj.normalized_magnitude(traj.rho.size() - 1, state.delta) >
            1e3 * traj.normalized_magnitude(i5, state.delta);
  }
  t.require(grows, "detuned trajectory stays bounded");
  return {"radial ODE cross-check", t.ok(), t.summary()};
}

CheckGroup gordon_group() {
  Tally t(1e-8);
  for (int n : {0, 1, 3}) {
    for (int k : {0, 1, 4}) {
      for (double B : {1e-7, 1e-2, 1.0, 1e8}) {
        const QuantumNumbers qn{n, k};
        const auto s = build_state(qn, B);
        const double closed = moments::edm_closed(qn, B, s.epsilon).value;
        const double quad = gordon::polarization_quadrature(s).p1_ecm;
        t.observe(rel(quad, closed), label(qn, B));
        const double circle =
            gordon::polarization_quadrature(s, {}, gordon::AngularConvention::FullCircle)
                .p1_ecm;
        t.require(std::abs(circle) <= 1e-14 * std::abs(quad), "full circle " + label(qn, B));
      }
    }
  }
  return {"Gordon polarization oracle", t.ok(), t.summary()};
}

CheckGroup magneton_group() {
  Tally t(1e-10);
  const auto weak = build_state({0, 0}, 1e-10);
  t.require(rel(gordon::magnetization_quadrature(weak), moments::mdm_closed()) <= 1e-6,
            "Bohr magneton limit");
  const auto& c = units::codata2018;
  t.require(rel(moments::mdm_closed(), c.e_charge * c.hbar / (2.0 * c.m_e)) <= 1e-9,
            "mu_B constant");
  for (int n : {0, 1, 3}) {
    for (int k : {0, 1, 4}) {
      for (double B : {1e-2, 1e8, 1e10}) {
        const QuantumNumbers qn{n, k};
        const auto s = build_state(qn, B);
        t.observe(rel(gordon::magnetization_quadrature(s),
                      moments::mdm_finite_field(qn, B, s.epsilon).value),
                  label(qn, B));
      }
    }
  }
  return {"Bohr magneton", t.ok(), t.summary()};
}

CheckGroup regime_group() {
  Tally t(0.005);
  const double eps = 2.6e5;
  const QuantumNumbers cases[] = {{0, 0}, {1, 0}, {0, 2}, {3, 1}};
  for (auto qn : cases) {
    const double b_high = units::field_for_energy_scale(eps / 1e3);
    const double b_low = units::field_for_energy_scale(eps / 1e-3);
    auto p = [&](double B) { return moments::edm_closed(qn, B, eps).value; };
    t.observe(rel(p(4 * b_high) / p(b_high), 2.0), "sqrt(B) growth " + label(qn, b_high));
    t.observe(rel(p(4 * b_low) / p(b_low), 0.5), "1/sqrt(B) decay " + label(qn, b_low));

    const double b100 = units::field_for_energy_scale(eps / 100.0);
    const double b001 = units::field_for_energy_scale(eps / 0.01);
    t.require(rel(moments::edm_asymptotic_high(qn, b100, eps).value, p(b100)) <= 0.01,
              "high asymptotic " + label(qn, b100));
    t.require(rel(moments::edm_asymptotic_low(qn, b001, eps).value, p(b001)) <= 0.01,
              "low asymptotic " + label(qn, b001));
  }
  return {"regime scaling laws", t.ok(), t.summary()};
}

CheckGroup bmax_group() {
  Tally t(1e-6);
  const double eps = 2.6e5;
  const QuantumNumbers cases[] = {{0, 0}, {1, 0}, {0, 2}, {3, 1}};
  for (auto qn : cases) {
    const double analytic = moments::b_max(qn, eps);
    t.observe(rel(moments::b_max_numeric(qn, eps), analytic), label(qn, analytic));
    auto p = [&](double B) { return moments::edm_closed(qn, B, eps).value; };
    const double h = 1e-3 * analytic;
    t.require(p(analytic + h) - 2 * p(analytic) + p(analytic - h) < 0.0,
              "curvature " + label(qn, analytic));
    double prev_B = 0.0;
    double prev = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double B = analytic * std::pow(10.0, -4.0 + 8.0 * i / 199.0);
      const double v = p(B);
      if (i > 0 && B < analytic) t.require(v > prev, "rising " + label(qn, B));
      if (i > 0 && prev_B > analytic) t.require(v < prev, "falling " + label(qn, B));
      prev_B = B;
      prev = v;
    }
  }
  return {"eEDM maximum", t.ok(), t.summary()};
}

CheckGroup planck_group() {
  const double v = moments::edm_closed({0, 0}, 1e53, 2.6e5).value;
  const bool ok = v >= 1e-34 && v <= 1e-33;
  return {"Planck-scale extrapolation", ok, "p1 = " + format_number(v) + " e*cm"};
}

}  // namespace

std::vector<CheckGroup> run_verification(std::ostream& log) {
  const std::pair<const char*, std::function<CheckGroup()>> groups[] = {
      {"special functions", special_functions_group},
      {"spectrum identity", spectrum_group},
      {"normalization", normalization_group},
      {"radial residuals", residual_group},
      {"radial ODE cross-check", ode_group},
      {"Gordon polarization oracle", gordon_group},
      {"Bohr magneton", magneton_group},
      {"regime scaling laws", regime_group},
      {"eEDM maximum", bmax_group},
      {"Planck-scale extrapolation", planck_group},
  };
  std::vector<CheckGroup> results;
  for (const auto& [name, run] : groups) {
    const auto start = std::chrono::steady_clock::now();
    CheckGroup r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {name, false, std::string("raised: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " - " << r.detail << '\n';
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace dmoments::report
