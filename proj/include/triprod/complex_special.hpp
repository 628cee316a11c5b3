#pragma once

#include "triprod/common.hpp"

namespace triprod {

/// Principal branch of ln Gamma(z), continuous on the plane cut along the
/// negative real axis. Combines a Stirling expansion (large |z| or large
/// imaginary part), Taylor series near the zeros at z = 1 and z = 2, upward
/// recurrence in the strip, and the reflection formula for Re z < 0.1 with an
/// overflow-safe unwrapped log-sin term.
///
/// Throws PoleError when z is within 1e-12 of a non-positive integer.
ComplexValue log_gamma(ComplexValue z);

/// |Gamma(z)|^2 = exp(2 Re ln Gamma(z)). Evaluated in log space so that the
/// large Gamma magnitudes appearing in series terms never overflow before
/// their exponential suppression is applied.
double gamma_abs_sq(ComplexValue z);

/// Gauss hypergeometric function 2F1(a,b;c;z) by its power series.
/// Requires |z| <= 0.75 (geometric convergence); truncation error below
/// ~1e-13 relative. Throws PoleError for c a non-positive integer,
/// NoConvergence past 500 terms, DomainError for |z| > 0.75.
ComplexValue hyp2f1(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z);

/// t^p = exp(p ln t) for real t > 0 with the real natural log; single-valued.
/// Throws DomainError for t <= 0.
ComplexValue complex_pow(double t, ComplexValue p);

/// ln Gamma(x) for real x > 0.
double real_log_gamma(double x);

/// True when z lies within eps of a non-positive integer (Gamma pole).
bool near_nonpositive_integer(ComplexValue z, double eps);

}  // namespace triprod
