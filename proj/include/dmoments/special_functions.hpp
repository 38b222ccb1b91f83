#pragma once

#include <cstddef>

namespace dmoments::special {

/// Natural log of Gamma(x) for x > 0. Lanczos approximation (13-term,
/// g = 6.0246800407767296, the double-precision set also used by Boost);
/// absolute error below 1e-13 * max(1, |ln Gamma(x)|) on [0.5, 1e6].
double ln_gamma(double x);

/// Gamma(num) / Gamma(den), evaluated through log-gamma so that large
/// arguments do not overflow.
double gamma_ratio(double num, double den);

/// Arguments of the confluent hypergeometric function 1F1(a; b; x).
/// b must not be zero or a negative integer; only x >= 0 is supported.
struct KummerParams {
  double a;
  double b;
  double x;
};

inline constexpr double kKummerSeriesTolerance = 1e-15;
inline constexpr std::size_t kKummerMaxTerms = 10'000;

/// Kummer's function M(a, b, x). Non-positive integer a takes the
/// terminating polynomial path; everything else sums the Taylor series.
double kummer_1f1(const KummerParams& p);

/// The general Taylor-series path, without the polynomial shortcut.
/// Exposed so the two routes can be checked against each other.
double kummer_1f1_series(const KummerParams& p);

/// d/dx M(a, b, x) = (a / b) M(a + 1, b + 1, x).
double kummer_1f1_derivative(const KummerParams& p);

namespace testing {

// Fault injection for verification runs: every Gamma value is multiplied
// by (1 + relative_error). Zero restores exact behaviour.
void set_gamma_fault(double relative_error);
double gamma_fault();

}  // namespace testing

}  // namespace dmoments::special
