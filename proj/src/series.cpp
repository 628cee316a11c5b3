// Series summation in log space. Term magnitudes combine 2 Re ln Gamma,
// ln|sin| and k * Re alpha before a single exponentiation; the raw factors
// (Gamma magnitudes ~ e^{k ln k}, sin(pi k e^{i pi/3}) ~ e^{pi sqrt3 k/2}/2)
// overflow doubles near k ~ 300 while the terms themselves shrink
// geometrically.

#include "triprod/series.hpp"

#include <cmath>
#include <string>

#include "triprod/complex_special.hpp"
#include "triprod/errors.hpp"

namespace triprod {

namespace {
constexpr int kMaxTerms = 400;
}

AlphaParam::AlphaParam(ComplexValue a) : alpha(a) {
  if (!(a.real() > kAlphaConvergenceEdge))
    throw DomainError("AlphaParam: Re alpha must exceed pi/(2 sqrt 3)");
}

double residue_term(double b, int n) {
  const double nb = static_cast<double>(n) + b;
  const ComplexValue w = b - kOmega * nb;
  const double logmag = 2.0 * log_gamma(w).real() - real_log_gamma(n + 1.0) - std::log(nb);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(logmag);
}

SeriesResult residue_sum(double b, double tol) {
  if (!(b > 0.0)) throw DomainError("residue_sum: b must be positive");
  if (!(tol > 0.0)) throw DomainError("residue_sum: tol must be positive");
  double sum = 0.0;
  double last = 0.0;
  int small_run = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    last = residue_term(b, n);
    sum += last;
    if (std::abs(last) < tol * std::abs(sum)) {
      if (++small_run >= 3)
        return {ComplexValue(sum, 0.0), n + 1, std::abs(last) / std::abs(sum)};
    } else {
      small_run = 0;
    }
  }
  throw NoConvergence("residue_sum: no convergence within 400 terms (b = " +
                      std::to_string(b) + ")");
}

SeriesResult ramanujan_series(const AlphaParam& alpha, double tol) {
  const ComplexValue a = alpha.alpha;
  if (!(a.real() > kAlphaConvergenceEdge + kAlphaMargin))
    throw DomainError("ramanujan_series: Re alpha must exceed pi/(2 sqrt 3) + 0.05");
  if (!(tol > 0.0)) throw DomainError("ramanujan_series: tol must be positive");

  ComplexValue sum{0.0, 0.0};
  double last_mag = 0.0;
  int small_run = 0;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const double dk = static_cast<double>(k);
    const double tau = kPi * kSqrt3 * dk / 2.0;

    // sin(pi k e^{i pi/3}) = sin(pi k/2) cosh(tau) + i cos(pi k/2) sinh(tau);
    // only one of the two survives for integer k.
    ComplexValue trig_unit;
    double trig_corr;  // ln((1 +- e^{-2 tau})/2) relative to the e^{tau} scale
    switch (k % 4) {
      case 1: trig_unit = {1.0, 0.0};  trig_corr = std::log1p(std::exp(-2.0 * tau)); break;
      case 3: trig_unit = {-1.0, 0.0}; trig_corr = std::log1p(std::exp(-2.0 * tau)); break;
      case 2: trig_unit = {0.0, -1.0}; trig_corr = std::log1p(-std::exp(-2.0 * tau)); break;
      default: trig_unit = {0.0, 1.0}; trig_corr = std::log1p(-std::exp(-2.0 * tau)); break;
    }

    const ComplexValue w = 1.0 - kOmega * dk;
    const double logmag = 2.0 * log_gamma(w).real() - real_log_gamma(dk + 1.0) +
                          tau + trig_corr - kLn2 - dk * a.real();

    // (-i)^k cycles {1, -i, -1, i} with k % 4. Combined with (-1)^k and the
    // trig unit the total phase is exactly i for every k at real alpha, so
    // the sum is purely imaginary there.
    static const ComplexValue kMinusIPow[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    const ComplexValue phase = ((k % 2 == 0) ? 1.0 : -1.0) * kMinusIPow[k % 4] * trig_unit *
                               std::exp(ComplexValue(0.0, -dk * a.imag()));

    const ComplexValue term = std::exp(logmag) * phase;
    sum += term;
    last_mag = std::abs(term);
    if (last_mag < tol * std::abs(sum)) {
      if (++small_run >= 3)
        return {sum, k, last_mag / std::abs(sum)};
    } else {
      small_run = 0;
    }
  }
  throw NoConvergence("ramanujan_series: no convergence within 400 terms");
}

double solve_y(const AlphaParam& alpha) {
  if (std::abs(alpha.alpha.imag()) > 1e-14)
    throw DomainError("solve_y: alpha must be real");
  const double a = alpha.alpha.real();
  const double target = std::exp(-a);

  // Unique root in (0, pi/6); the left-hand side rises from 0 to its first
  // maximum at y = pi/6.
  auto g = [&](double y) { return 2.0 * std::exp(-kSqrt3 * y) * std::sin(y) - target; };
  auto gp = [&](double y) {
    return 2.0 * std::exp(-kSqrt3 * y) * (std::cos(y) - kSqrt3 * std::sin(y));
  };

  double lo = 0.0, hi = kPi / 6.0;
  double y = 0.5 * target;  // 2 sin y ~ 2y near 0
  for (int it = 0; it < 100; ++it) {
    const double gy = g(y);
    if (gy > 0.0) hi = y; else lo = y;
    if (std::abs(gy) < 1e-15) {
      // polish once more and return
      y -= gy / gp(y);
      return y;
    }
    double ynext = y - gy / gp(y);
    if (!(ynext > lo) || !(ynext < hi)) ynext = 0.5 * (lo + hi);
    y = ynext;
  }
  throw NoConvergence("solve_y: Newton did not converge within 100 iterations");
}

}  // namespace triprod
