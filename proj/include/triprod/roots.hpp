#pragma once

#include <functional>
#include <vector>

#include "triprod/common.hpp"

namespace triprod {

/// F(z) = e^{i sqrt3 z} + 2 cosh z, whose upper-half-plane zeros sit close to
/// i pi (n + 1/2), and its derivative.
ComplexValue exp_cosh(ComplexValue z);
ComplexValue exp_cosh_prime(ComplexValue z);

struct RootRecord {
  int index = 0;              // n >= 0
  ComplexValue seed;          // i pi (n + 1/2)
  ComplexValue root;
  double residual = 0.0;      // |F(root)|
  int iterations = 0;
};

/// Newton iteration with the analytic derivative from each seed
/// i pi (n + 1/2), n = 0..N-1. Throws NoConvergence if a seed fails within
/// 100 iterations or leaves its basin (|root - seed| >= 0.2).
std::vector<RootRecord> find_roots_upper(int N, double tol);

/// Closed polyline (last vertex connects back to the first).
struct Contour {
  std::vector<ComplexValue> vertices;
};

/// Positively oriented boundary of the upper half-disk of radius R:
/// the diameter [-R, R] plus a semicircular arc approximated by
/// `arc_segments` chords.
Contour semicircle_contour(double R, int arc_segments = 720);

/// Nearest integer to the accumulated argument change of F along the contour
/// divided by 2 pi. Samples uniformly in (length) parameter; any step with
/// |delta arg| >= pi/2 is bisected adaptively so no 2 pi slip can hide.
/// Requires samples >= 2000. Throws NearZeroOnContour if |F| < 1e-12 at a
/// sample and AmbiguousWinding if the raw value sits more than 0.1 from an
/// integer.
int winding_count(const std::function<ComplexValue(ComplexValue)>& F,
                  const Contour& contour, int samples);

struct SymmetryReport {
  int roots_checked = 0;
  double max_rotated_residual = 0.0;  // max over |F(omega r)|, |F(r/omega)|
  double max_axis_offset = 0.0;       // max |Re r|
  bool pass = false;
};

/// Verifies for each located root r that the rotated points omega r and
/// r/omega again sit on roots -- the Newton displacement
/// |F|/max(1, |F'|) there must stay below tol -- and that every
/// upper-half-plane root lies within tol of the imaginary axis.
/// Throws SymmetryViolation naming the offending root.
SymmetryReport ray_symmetry_check(const std::vector<RootRecord>& records, double tol);

}  // namespace triprod
