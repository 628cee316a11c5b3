// Complex special-function kernel: principal-branch log-gamma, Gamma
// magnitude squared, the Gauss hypergeometric series and complex powers of
// positive reals. The log-gamma zone structure follows the usual practice
// for the principal branch: Stirling where it is accurate, Taylor series
// near the zeros at z = 1, 2, upward recurrence in the remaining strip and
// reflection for Re z < 0.1.

#include "triprod/complex_special.hpp"

#include <cmath>

#include "triprod/errors.hpp"

namespace triprod {

namespace {

// log(1 + w) for complex w, accurate near w = 0.
ComplexValue clog1p(ComplexValue w) {
  const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
  const double im = std::atan2(w.imag(), 1.0 + w.real());
  return {re, im};
}

// exp(w) - 1 for complex w, accurate near w = 0.
ComplexValue cexpm1(ComplexValue w) {
  const double ea = std::expm1(w.real());
  const double s = std::sin(0.5 * w.imag());
  const double re = ea * std::cos(w.imag()) - 2.0 * s * s;
  const double im = (ea + 1.0) * std::sin(w.imag());
  return {re, im};
}

// Stirling series, valid away from the negative real axis; with eight
// Bernoulli terms the truncation error is below 1e-15 relative for the
// |z| >= 7 region it is applied to.
ComplexValue log_gamma_stirling(ComplexValue z) {
  // B_{2n} / (2n (2n-1)), n = 8..1.
  static constexpr double kCoef[8] = {
      -2.9550653594771241830e-2, 6.4102564102564102564e-3,
      -1.9175269175269175269e-3, 8.4175084175084175084e-4,
      -5.9523809523809523810e-4, 7.9365079365079365079e-4,
      -2.7777777777777777778e-3, 8.3333333333333333333e-2};
  const ComplexValue rz = 1.0 / z;
  const ComplexValue rzz = rz * rz;
  ComplexValue p = kCoef[0];
  for (int i = 1; i < 8; ++i) p = p * rzz + kCoef[i];
  return (z - 0.5) * std::log(z) - z + kHalfLn2Pi + rz * p;
}

// ln Gamma(1 + t) for |t| <= 0.2: -gamma t + sum_{k>=2} (-1)^k zeta(k)/k t^k.
ComplexValue log_gamma_taylor(ComplexValue t) {
  // (-1)^k zeta(k)/k for k = 24..2.
  static constexpr double kCoef[23] = {
      4.1666666698297564380e-2,  -4.3478266053040259350e-2,
      4.5454556293204669440e-2,  -4.7619070330142227990e-2,
      5.0000047698101693640e-2,  -5.2631679379616660730e-2,
      5.5555767627393618680e-2,  -5.8823533523937575740e-2,
      6.2500955141213040740e-2,  -6.6668705882420468030e-2,
      7.1432946295361336060e-2,  -7.6932516413359310710e-2,
      8.3353840546109004020e-2,  -9.0954017145829042230e-2,
      1.0009945751278180853e-1,  -1.1133426586956469049e-1,
      1.2550966952474304243e-1,  -1.4404989676884611812e-1,
      1.6955717699740818995e-1,  -2.0738555102867398527e-1,
      2.7058080842778454788e-1,  -4.0068563438653142847e-1,
      8.2246703342411321824e-1};
  ComplexValue p = kCoef[0];
  for (int i = 1; i < 23; ++i) p = p * t + kCoef[i];
  return t * (t * p - 0.57721566490153286061);
}

// Upward recurrence into the Stirling zone, tracking branch crossings of the
// accumulated shift product (each positive->negative crossing of the
// imaginary part is one full winding of the argument). Requires Im z >= 0.
ComplexValue log_gamma_recurrence(ComplexValue z) {
  int signflips = 0;
  int sb = 0;
  ComplexValue shiftprod = z;
  z += 1.0;
  while (z.real() <= 7.0) {
    shiftprod *= z;
    const int nsb = std::signbit(shiftprod.imag()) ? 1 : 0;
    if (nsb != 0 && sb == 0) ++signflips;
    sb = nsb;
    z += 1.0;
  }
  return log_gamma_stirling(z) - std::log(shiftprod) -
         ComplexValue(0.0, signflips * 2.0 * kPi);
}

}  // namespace

bool near_nonpositive_integer(ComplexValue z, double eps) {
  if (z.real() > 0.5) return false;
  const double r = std::round(z.real());
  if (r > 0.5) return false;
  return std::hypot(z.real() - r, z.imag()) <= eps;
}

ComplexValue log_gamma(ComplexValue z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("log_gamma: non-finite argument");
  if (near_nonpositive_integer(z, 1e-12))
    throw PoleError("log_gamma: argument within 1e-12 of a non-positive integer");
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));

  // Im z >= 0 from here on.
  if (z.real() >= 0.1 && (z.real() > 7.0 || z.imag() > 7.0))
    return log_gamma_stirling(z);
  if (std::abs(z - 1.0) <= 0.2) return log_gamma_taylor(z - 1.0);
  if (std::abs(z - 2.0) <= 0.2) return clog1p(z - 2.0) + log_gamma_taylor(z - 2.0);
  if (z.real() < 0.1) {
    // Reflection. With sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}) the
    // branch L below is analytic on the closed upper half-plane, so
    // ln pi - L(z) - ln Gamma(1 - z) is the principal branch with no extra
    // winding term. The periodic factor is argument-reduced for accuracy
    // near the poles.
    const ComplexValue zr{z.real() - std::round(z.real()), z.imag()};
    const ComplexValue one_minus_e2 = -cexpm1(ComplexValue(0.0, 2.0 * kPi) * zr);
    const ComplexValue L = ComplexValue(-kLn2, 0.5 * kPi) -
                           ComplexValue(0.0, kPi) * z + std::log(one_minus_e2);
    return ComplexValue(kLnPi, 0.0) - L - log_gamma(1.0 - z);
  }
  return log_gamma_recurrence(z);
}

double gamma_abs_sq(ComplexValue z) {
  const double two_re = 2.0 * log_gamma(z).real();
  if (two_re > 708.0)
    throw NonFinite("gamma_abs_sq: |Gamma(z)|^2 exceeds double range");
  return std::exp(two_re);
}

ComplexValue hyp2f1(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z) {
  if (std::abs(z) > 0.75)
    throw DomainError("hyp2f1: series evaluation requires |z| <= 0.75");
  if (near_nonpositive_integer(c, 1e-12))
    throw PoleError("hyp2f1: c is (numerically) a non-positive integer");

  constexpr int kMaxTerms = 500;
  ComplexValue sum = 1.0;
  ComplexValue term = 1.0;
  int small_in_a_row = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 2e-14 * std::abs(sum)) {
      if (++small_in_a_row >= 2) return sum;
    } else {
      small_in_a_row = 0;
    }
  }
  throw NoConvergence("hyp2f1: series did not converge within 500 terms");
}

ComplexValue complex_pow(double t, ComplexValue p) {
  if (!(t > 0.0)) throw DomainError("complex_pow: base must be positive");
  return std::exp(p * std::log(t));
}

double real_log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("real_log_gamma: argument must be positive");
  return std::lgamma(x);
}

}  // namespace triprod
