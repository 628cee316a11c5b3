#pragma once

#include "triprod/common.hpp"

namespace triprod {

/// Parameter of the product P_b(z) = prod_{k>=0} (1 + z^3/(k+b)^3)^{-1}.
struct ProductParams {
  double b;
  explicit ProductParams(double b_);
};

/// ln P_b(z) through the Gamma closed form
///   P_b(z) = Gamma(b+z) Gamma(b+omega z) Gamma(b+z/omega) / Gamma(b)^3.
/// Throws PoleError (naming the factor) when any Gamma argument lies within
/// 1e-10 of a non-positive integer.
ComplexValue log_product_gamma(const ProductParams& params, ComplexValue z);

/// P_b(z) via the Gamma closed form; computed in log space and exponentiated
/// once. This is the production evaluator.
ComplexValue product_gamma_form(const ProductParams& params, ComplexValue z);

struct TruncatedProduct {
  ComplexValue value;
  double tail_rel;  // relative tail bound exp(|z|^3 / (2(K+b-1)^2)) - 1
};

/// Direct truncation of the defining product over k = 0..K-1; exists as an
/// independent cross-check oracle (the tail shrinks only like 1/K^2, too slow
/// for production use). Throws ZeroFactor when a factor vanishes.
TruncatedProduct product_truncated(const ProductParams& params, ComplexValue z, long K);

/// Asymptotic magnitude model |P_b(z)| = |z|^{3b-3/2} * exp(...) with unit
/// constant, valid for |z| >= 5 and 0 <= arg z < 2*pi/3:
///   exp(-2*pi*x/sqrt(3))        for arg z <= pi/3,
///   exp(pi*x/sqrt(3) - pi*y)    for pi/3 < arg z < 2*pi/3.
/// Used for ratio tests and truncation-radius selection only.
double asymptotic_mag(const ProductParams& params, ComplexValue z);

}  // namespace triprod
