#include "triprod/product.hpp"

#include <cmath>
#include <string>

#include "triprod/complex_special.hpp"
#include "triprod/errors.hpp"

namespace triprod {

namespace {
constexpr double kPoleEps = 1e-10;
}

ProductParams::ProductParams(double b_) : b(b_) {
  if (!(b > 0.0)) throw DomainError("ProductParams: b must be positive");
}

ComplexValue log_product_gamma(const ProductParams& params, ComplexValue z) {
  const double b = params.b;
  const ComplexValue args[3] = {b + z, b + kOmega * z, b + kOmegaBar * z};
  static const char* kNames[3] = {"b+z", "b+omega*z", "b+z/omega"};
  for (int i = 0; i < 3; ++i) {
    if (near_nonpositive_integer(args[i], kPoleEps))
      throw PoleError(std::string("product: factor ") + kNames[i] +
                      " within 1e-10 of a non-positive integer");
  }
  return log_gamma(args[0]) + log_gamma(args[1]) + log_gamma(args[2]) -
         3.0 * real_log_gamma(b);
}

ComplexValue product_gamma_form(const ProductParams& params, ComplexValue z) {
  return std::exp(log_product_gamma(params, z));
}

TruncatedProduct product_truncated(const ProductParams& params, ComplexValue z, long K) {
  if (K < 1) throw DomainError("product_truncated: K must be >= 1");
  const double b = params.b;
  const ComplexValue z3 = z * z * z;
  ComplexValue prod{1.0, 0.0};
  for (long k = 0; k < K; ++k) {
    const double kb = static_cast<double>(k) + b;
    const ComplexValue factor = 1.0 + z3 / (kb * kb * kb);
    if (std::abs(factor) <= 1e-14)
      throw ZeroFactor(static_cast<int>(k),
                       "product_truncated: factor vanished at k = " + std::to_string(k));
    prod *= factor;
  }
  const double denom = static_cast<double>(K) + b - 1.0;
  const double tail = std::expm1(std::pow(std::abs(z), 3.0) / (2.0 * denom * denom));
  return {1.0 / prod, tail};
}

double asymptotic_mag(const ProductParams& params, ComplexValue z) {
  const double r = std::abs(z);
  if (r < 5.0) throw DomainError("asymptotic_mag: requires |z| >= 5");
  const double arg = std::arg(z);
  if (arg < 0.0 || arg >= 2.0 * kPi / 3.0)
    throw DomainError("asymptotic_mag: requires 0 <= arg z < 2*pi/3");
  const double x = z.real(), y = z.imag();
  const double expo = (arg <= kPi / 3.0) ? -2.0 * kPi * x / kSqrt3
                                         : kPi * x / kSqrt3 - kPi * y;
  return std::pow(r, 3.0 * params.b - 1.5) * std::exp(expo);
}

}  // namespace triprod
