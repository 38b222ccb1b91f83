#include "dmoments/landau_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dmoments/error.hpp"
#include "dmoments/special_functions.hpp"

namespace dmoments {
namespace {

using std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidInputError(std::string(what) + " must be positive and finite");
  }
}

// rho^p e^{-rho/2}, with 0^0 = 1.
double power_decay(double rho, double p) {
  if (rho == 0.0) return p == 0.0 ? 1.0 : 0.0;
  return std::exp(p * std::log(rho) - 0.5 * rho);
}

double landau_index(const QuantumNumbers& qn) { return qn.n + qn.k + 1.0; }

std::complex<double> phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

void validate(const QuantumNumbers& qn) {
  if (qn.n < 0) throw InvalidInputError("principal number n must be >= 0");
  if (qn.k < 0) throw InvalidInputError("angular-momentum number k must be >= 0");
}

double energy_from_scale(const QuantumNumbers& qn, double scale, double mass) {
  validate(qn);
  require_positive(mass, "mass");
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw InvalidInputError("energy scale must be >= 0");
  }
  return std::sqrt(mass * mass + scale * scale * landau_index(qn));
}

double kinetic_energy_from_scale(const QuantumNumbers& qn, double scale,
                                 double mass) {
  const double e = energy_from_scale(qn, scale, mass);
  // E - m = scale^2 (n + k + 1) / (E + m)
  return scale * scale * landau_index(qn) / (e + mass);
}

double energy(const QuantumNumbers& qn, double B0_tesla, double m_e_c2_eV) {
  return energy_from_scale(qn, units::magnetic_energy_scale_eV(B0_tesla),
                           m_e_c2_eV);
}

double normalization_n2_sq(double weight_A, double delta) {
  const double two_delta = 2.0 * delta;
  return std::exp(-special::ln_gamma(two_delta)) /
         (2.0 * pi * (weight_A + two_delta));
}

LandauState build_state_from_scale(const QuantumNumbers& qn, double scale,
                                   double mass) {
  validate(qn);
  require_positive(scale, "energy scale");
  require_positive(mass, "mass");

  LandauState s;
  s.qn = qn;
  s.m_e_c2 = mass;
  s.scale = scale;
  s.E = energy_from_scale(qn, scale, mass);
  s.epsilon = kinetic_energy_from_scale(qn, scale, mass);
  s.delta = qn.n + 0.5 * (qn.k + 1);
  s.N1_over_N2 = (qn.k + 1) * scale / s.epsilon;
  s.N2_sq = normalization_n2_sq(s.normalization_weight(), s.delta);
  return s;
}

LandauState build_state(const QuantumNumbers& qn, double B0_tesla,
                        double m_e_c2_eV) {
  if (!(B0_tesla > 0.0) || !std::isfinite(B0_tesla)) {
    throw InvalidInputError("magnetic field must be > 0 to build a state");
  }
  auto s = build_state_from_scale(
      qn, units::magnetic_energy_scale_eV(B0_tesla), m_e_c2_eV);
  s.B0_tesla = B0_tesla;
  return s;
}

Spinor2 spinor_exact(const LandauState& state, double rho, double theta,
                     double t) {
  if (!(rho >= 0.0)) throw DomainError("rho must be >= 0");
  const auto [n, k] = state.qn;
  const double n2 = std::sqrt(state.N2_sq);
  const double n1 = state.N1_over_N2 * n2;
  const double m1 = special::kummer_1f1({-static_cast<double>(n), k + 1.0, rho});
  const double m2 = special::kummer_1f1({-static_cast<double>(n), k + 2.0, rho});
  const auto common = phase(-state.E * t);
  return {
      .chi = common * phase(k * theta) * (n1 * power_decay(rho, 0.5 * k) * m1),
      .phi = common * phase((k + 1) * theta) *
             (n2 * power_decay(rho, 0.5 * (k + 1)) * m2),
  };
}

Spinor2 spinor_asymptotic(const LandauState& state, double rho, double theta,
                          double t) {
  if (!(rho >= 0.0)) throw DomainError("rho must be >= 0");
  if (rho == 0.0 && state.delta < 0.5) {
    throw DomainError("asymptotic spinor diverges at rho = 0 for delta < 1/2");
  }
  const double n2 = std::sqrt(state.N2_sq);
  const auto common = phase(state.qn.k * theta - state.E * t);
  return {
      .chi = common * (n2 * state.N1_over_N2 * power_decay(rho, state.delta - 0.5)),
      .phi = common * phase(theta) * (n2 * power_decay(rho, state.delta)),
  };
}

double norm_integral(const LandauState& state,
                     const QuadratureSettings& settings) {
  const double weight = state.normalization_weight();
  const double two_delta = 2.0 * state.delta;
  auto density = [&](double rho) {
    if (rho == 0.0) return two_delta == 1.0 ? weight : 0.0;
    const double log_rho = std::log(rho);
    return weight * std::exp((two_delta - 1.0) * log_rho - rho) +
           std::exp(two_delta * log_rho - rho);
  };
  const double rho_max = settings.rho_max > 0.0
                             ? settings.rho_max
                             : default_rho_max(state.delta);
  return 2.0 * pi * state.N2_sq * integrate_radial(density, rho_max, settings);
}

RadialProblem RadialProblem::from_state(const LandauState& state) {
  return {.qn = state.qn,
          .mass = state.m_e_c2,
          .scale = state.scale,
          .energy = state.E,
          .kinetic = state.epsilon,
          .N2 = std::sqrt(state.N2_sq)};
}

RadialProblem RadialProblem::detuned(double relative_shift) const {
  RadialProblem p = *this;
  p.energy = energy * (1.0 + relative_shift);
  p.kinetic = kinetic + relative_shift * energy;
  return p;
}

double RadialProblem::N1() const {
  return (qn.k + 1) * scale / kinetic * N2;
}

std::pair<double, double> RadialProblem::closed_form(double rho) const {
  const double n = -static_cast<double>(qn.n);
  const double m1 = special::kummer_1f1({n, qn.k + 1.0, rho});
  const double m2 = special::kummer_1f1({n, qn.k + 2.0, rho});
  return {N1() * power_decay(rho, 0.5 * qn.k) * m1,
          N2 * power_decay(rho, 0.5 * (qn.k + 1)) * m2};
}

std::pair<double, double> RadialProblem::closed_form_derivative(
    double rho) const {
  if (!(rho > 0.0)) throw DomainError("derivative requires rho > 0");
  const double n = -static_cast<double>(qn.n);
  const special::KummerParams p1{n, qn.k + 1.0, rho};
  const special::KummerParams p2{n, qn.k + 2.0, rho};
  const double w1 = N1() * power_decay(rho, 0.5 * qn.k);
  const double w2 = N2 * power_decay(rho, 0.5 * (qn.k + 1));
  const double m1 = special::kummer_1f1(p1);
  const double m2 = special::kummer_1f1(p2);
  const double d1 = w1 * (m1 * (0.5 * qn.k / rho - 0.5) +
                          special::kummer_1f1_derivative(p1));
  const double d2 = w2 * (m2 * (0.5 * (qn.k + 1) / rho - 0.5) +
                          special::kummer_1f1_derivative(p2));
  return {d1, d2};
}

std::pair<double, double> radial_residual(const RadialProblem& problem,
                                          double rho) {
  if (!(rho > 0.0)) throw DomainError("radial residual requires rho > 0");
  const auto [f1, f2] = problem.closed_form(rho);
  const auto [d1, d2] = problem.closed_form_derivative(rho);
  const double k = problem.qn.k;
  const double coupling = problem.scale * std::sqrt(rho);
  const double plus = (problem.energy + problem.mass) / coupling;
  const double minus = problem.kinetic / coupling;

  auto relative = [](double a, double b, double c) {
    const double big = std::max({std::abs(a), std::abs(b), std::abs(c)});
    return big == 0.0 ? 0.0 : (a + b + c) / big;
  };
  return {relative(d1, -(0.5 * k / rho + 0.5) * f1, plus * f2),
          relative(d2, (0.5 * (k + 1) / rho + 0.5) * f2, -minus * f1)};
}

std::pair<double, double> radial_residual(const LandauState& state,
                                          double rho) {
  return radial_residual(RadialProblem::from_state(state), rho);
}

double RadialTrajectory::normalized_magnitude(std::size_t i,
                                              double delta) const {
  const double r = rho.at(i);
  return std::hypot(F1.at(i), F2.at(i)) / power_decay(r, delta);
}

RadialTrajectory integrate_radial_ode(const RadialProblem& problem,
                                      double rho_max, double step) {
  if (!(step > 0.0) || !(rho_max > step) || !std::isfinite(rho_max)) {
    throw InvalidInputError("integration requires rho_max > step > 0");
  }
  if (!(rho_max > kOdeSeedRho)) {
    throw InvalidInputError("rho_max must exceed the seed point");
  }
  const int k = problem.qn.k;
  const double alpha = (problem.energy + problem.mass) / problem.scale;
  const double beta = problem.kinetic / problem.scale;

  // y = (F1, F2) / x^k as functions of x = sqrt(rho)
  struct State {
    double y1;
    double y2;
  };
  auto rhs = [&](double x, State s) -> State {
    return {x * s.y1 - 2.0 * alpha * s.y2,
            -((2.0 * k + 1.0) / x + x) * s.y2 + 2.0 * beta * s.y1};
  };
  auto axpy = [](State s, double h, State d) -> State {
    return {s.y1 + h * d.y1, s.y2 + h * d.y2};
  };

  double x = std::sqrt(kOdeSeedRho);
  const double x_end = std::sqrt(rho_max);
  const auto [f1_0, f2_0] = problem.closed_form(kOdeSeedRho);
  const double seed_scale = std::pow(x, k);
  State y{f1_0 / seed_scale, f2_0 / seed_scale};

  RadialTrajectory out;
  auto record = [&](double xv, State s) {
    const double xk = std::pow(xv, k);
    out.rho.push_back(xv * xv);
    out.F1.push_back(s.y1 * xk);
    out.F2.push_back(s.y2 * xk);
  };
  record(x, y);

  const auto steps = static_cast<long>(std::ceil((x_end - x) / step - 1e-9));
  out.rho.reserve(steps + 1);
  out.F1.reserve(steps + 1);
  out.F2.reserve(steps + 1);
  for (long i = 0; i < steps; ++i) {
    const double h = std::min(step, x_end - x);
    const State k1 = rhs(x, y);
    const State k2 = rhs(x + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State k3 = rhs(x + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State k4 = rhs(x + h, axpy(y, h, k3));
    y.y1 += h / 6.0 * (k1.y1 + 2.0 * k2.y1 + 2.0 * k3.y1 + k4.y1);
    y.y2 += h / 6.0 * (k1.y2 + 2.0 * k2.y2 + 2.0 * k3.y2 + k4.y2);
    x = (i + 1 == steps) ? x_end : x + h;
    if (!std::isfinite(y.y1) || !std::isfinite(y.y2)) {
      out.diverged = true;
      break;
    }
    record(x, y);
  }
  return out;
}

}  // namespace dmoments
