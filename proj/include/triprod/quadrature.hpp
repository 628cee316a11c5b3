#pragma once

#include <functional>
#include <vector>

#include "triprod/common.hpp"

namespace triprod {

enum class DeTransform {
  FullLineExpDecay,       // x = sinh((pi/2) sinh u), whole real line
  HalfLineExpDecay,       // x = exp((pi/2) sinh u), (0, inf)
  HalfLineAlgebraicDecay  // same map; tag declares the integrand's decay class
};

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_level = 12;  // trapezoid step h = 2^-level
  DeTransform transform = DeTransform::FullLineExpDecay;
};

struct QuadResult {
  ComplexValue value{0.0, 0.0};
  double err_estimate = 0.0;  // last inter-level difference
  long evaluations = 0;
  bool converged = false;
};

/// Per-level refinement history, filled when a diagnostics pointer is passed.
struct QuadDiagnostics {
  std::vector<double> level_diffs;  // |T_m - T_{m-1}| for m = 1,2,...
  std::vector<long> level_evals;
};

using Integrand = std::function<ComplexValue(double)>;

/// Double-exponential trapezoidal quadrature over (-inf, inf) for continuous
/// integrands with exponential decay. Refines by level doubling until two
/// successive levels differ by less than tolerance; node expansion stops once
/// the transformed integrand magnitude falls below abs_tol * 1e-2. Node
/// values are summed in a fixed order (pairwise) so equal configurations are
/// bit-reproducible. An exhausted level budget is reported through
/// `converged == false` with the best value and estimate retained.
/// Throws NonFinite if the integrand returns a non-finite value at a node.
QuadResult integrate_full_line(const Integrand& f, const QuadConfig& cfg,
                               QuadDiagnostics* diag = nullptr);

/// Same engine over (0, inf) under the exp-sinh map; cfg.transform selects
/// the declared decay class (HalfLineExpDecay or HalfLineAlgebraicDecay).
QuadResult integrate_half_line(const Integrand& f, const QuadConfig& cfg,
                               QuadDiagnostics* diag = nullptr);

}  // namespace triprod
