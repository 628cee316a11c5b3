#pragma once

#include "triprod/common.hpp"

namespace triprod {

struct SeriesResult {
  ComplexValue value{0.0, 0.0};
  int terms_used = 0;
  double tail_estimate = 0.0;  // |last term| / |sum|, relative truncation bound
};

/// Convergence variable of the transformed Ramanujan series; the series
/// converges for Re alpha > pi/(2 sqrt 3).
struct AlphaParam {
  ComplexValue alpha;
  explicit AlphaParam(ComplexValue a);
};

inline constexpr double kAlphaConvergenceEdge = 0.90689968211710892530;  // pi/(2 sqrt 3)
inline constexpr double kAlphaMargin = 0.05;

/// n-th term of the residue series, (-1)^n/n! |Gamma(b - omega(n+b))|^2/(n+b),
/// assembled in log space. Exposed so single terms can be checked directly.
double residue_term(double b, int n);

/// Sum of the residue series; equals Gamma(b)^3 / 3. Stops once three
/// consecutive terms are each below tol * |partial sum|; throws NoConvergence
/// after 400 terms.
SeriesResult residue_sum(double b, double tol);

/// Sum of the transformed Ramanujan series
///   sum_{k>=1} (-1)^k/k! |Gamma(1-omega k)|^2 sin(pi k e^{i pi/3}) (-i e^{-alpha})^k,
/// equal to 2 pi i sin y / (cos y - sqrt3 sin y)^3 with y = solve_y(alpha).
/// Every term is assembled in log space: the sin factor grows like
/// e^{pi sqrt3 k/2}/2 and must cancel against e^{-alpha k} without
/// intermediate overflow. Requires Re alpha > pi/(2 sqrt3) + 0.05.
SeriesResult ramanujan_series(const AlphaParam& alpha, double tol);

/// The root y near 0 of 2 e^{-sqrt3 y} sin y = e^{-alpha} for real
/// alpha > pi/(2 sqrt3); Newton iteration seeded at e^{-alpha}/2 with a
/// bisection bracket guard. Residual below 1e-14.
double solve_y(const AlphaParam& alpha);

}  // namespace triprod
