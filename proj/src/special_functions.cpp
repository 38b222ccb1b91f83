#include "dmoments/special_functions.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <string>

#include "dmoments/error.hpp"

namespace dmoments::special {
namespace {

std::atomic<double> g_gamma_fault{0.0};

// The 1F1 polynomials alternate in sign for x > 0. For n <= 30, x <= 50 the
// largest term exceeds the sum by up to ~2e16, so the sums run in binary128
// where the compiler provides it.
#if defined(__SIZEOF_FLOAT128__)
using Accum = __float128;
#else
using Accum = long double;
#endif

Accum magnitude(Accum v) { return v < 0 ? -v : v; }

constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kLanczosNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

// Expanded coefficients of x (x + 1) ... (x + 11).
constexpr std::array<double, 13> kLanczosDen = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,  357423.0,    32670.0,
    1925.0,     66.0,       1.0,
};

// Rational sum num(x) / den(x); evaluated in 1/x for large x to keep the
// Horner recurrences in range.
double lanczos_sum(double x) {
  double num = 0.0;
  double den = 0.0;
  if (x < 5.0) {
    for (std::size_t i = kLanczosNum.size(); i-- > 0;) {
      num = num * x + kLanczosNum[i];
      den = den * x + kLanczosDen[i];
    }
  } else {
    const double inv = 1.0 / x;
    for (std::size_t i = 0; i < kLanczosNum.size(); ++i) {
      num = num * inv + kLanczosNum[i];
      den = den * inv + kLanczosDen[i];
    }
  }
  return num / den;
}

bool is_non_positive_integer(double v) {
  return v <= 0.0 && std::floor(v) == v;
}

void validate(const KummerParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.x)) {
    throw DomainError("1F1 arguments must be finite");
  }
  if (is_non_positive_integer(p.b)) {
    throw DomainError("1F1 is undefined for b = " + std::to_string(p.b));
  }
  if (p.x < 0.0) throw DomainError("1F1 is only implemented for x >= 0");
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("ln_gamma requires a finite x > 0");
  }
  double result;
  if (x == 1.0 || x == 2.0) {
    result = 0.0;
  } else {
    result = std::log(lanczos_sum(x)) - kLanczosG +
             (x - 0.5) * (std::log(x + kLanczosG - 0.5) - 1.0);
  }
  const double fault = g_gamma_fault.load(std::memory_order_relaxed);
  if (fault != 0.0) result += std::log1p(fault);
  return result;
}

double gamma_ratio(double num, double den) {
  if (num == den) {
    // still validates the domain
    ln_gamma(num);
    return 1.0;
  }
  return std::exp(ln_gamma(num) - ln_gamma(den));
}

double kummer_1f1(const KummerParams& p) {
  validate(p);
  if (!is_non_positive_integer(p.a)) return kummer_1f1_series(p);

  // a = -n: exactly n + 1 terms.
  const auto n = static_cast<long>(-p.a);
  Accum term = 1;
  Accum sum = 1;
  for (long j = 0; j < n; ++j) {
    const auto jd = static_cast<Accum>(j);
    term *= (Accum{p.a} + jd) * p.x / ((Accum{p.b} + jd) * (jd + 1));
    sum += term;
  }
  return static_cast<double>(sum);
}

double kummer_1f1_series(const KummerParams& p) {
  validate(p);
  Accum term = 1;
  Accum sum = 1;
  for (std::size_t j = 0; j < kKummerMaxTerms; ++j) {
    const auto jd = static_cast<Accum>(j);
    term *= (Accum{p.a} + jd) * p.x / ((Accum{p.b} + jd) * (jd + 1));
    sum += term;
    if (magnitude(term) <= kKummerSeriesTolerance * magnitude(sum)) {
      return static_cast<double>(sum);
    }
  }
  throw NonConvergenceError("1F1 series did not converge within " +
                            std::to_string(kKummerMaxTerms) + " terms");
}

double kummer_1f1_derivative(const KummerParams& p) {
  validate(p);
  if (p.a == 0.0) return 0.0;
  return p.a / p.b * kummer_1f1({p.a + 1.0, p.b + 1.0, p.x});
}

namespace testing {

void set_gamma_fault(double relative_error) {
  g_gamma_fault.store(relative_error, std::memory_order_relaxed);
}

double gamma_fault() { return g_gamma_fault.load(std::memory_order_relaxed); }

}  // namespace testing

}  // namespace dmoments::special
