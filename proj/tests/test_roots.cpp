#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "triprod/errors.hpp"
#include "triprod/roots.hpp"

using triprod::ComplexValue;
using triprod::Contour;
using triprod::kPi;
using triprod::kSqrt3;

namespace {

// independent locator for the n = 0 root: iterative grid refinement of |F|
// over a rectangle, no derivatives involved
ComplexValue grid_refine_root() {
  double x0 = -0.3, x1 = 0.3, y0 = 1.2, y1 = 1.9;
  ComplexValue best;
  for (int round = 0; round < 14; ++round) {
    double best_mag = 1e300;
    const int n = 41;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const ComplexValue z{x0 + (x1 - x0) * i / (n - 1.0),
                             y0 + (y1 - y0) * j / (n - 1.0)};
        const double m = std::abs(triprod::exp_cosh(z));
        if (m < best_mag) {
          best_mag = m;
          best = z;
        }
      }
    }
    const double wx = 0.2 * (x1 - x0), wy = 0.2 * (y1 - y0);
    x0 = best.real() - wx / 2.0;
    x1 = best.real() + wx / 2.0;
    y0 = best.imag() - wy / 2.0;
    y1 = best.imag() + wy / 2.0;
  }
  return best;
}

Contour circle(double R, int n = 256) {
  Contour c;
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * kPi * i / n;
    c.vertices.emplace_back(R * std::cos(th), R * std::sin(th));
  }
  return c;
}

}  // namespace

TEST_CASE("seed residual matches e^{-pi sqrt3/2}") {
  const double seed_res = std::abs(triprod::exp_cosh({0.0, kPi / 2.0}));
  CHECK(std::abs(seed_res - std::exp(-kPi * kSqrt3 / 2.0)) < 1e-15);
  CHECK(std::abs(seed_res - 0.0658) < 1e-4);
}

TEST_CASE("find_roots_upper rejects bad arguments") {
  CHECK_THROWS_AS(triprod::find_roots_upper(0, 1e-12), triprod::DomainError);
  CHECK_THROWS_AS(triprod::find_roots_upper(3, -1.0), triprod::DomainError);
}

TEST_CASE("find_roots_upper basics") {
  const auto records = triprod::find_roots_upper(5, 1e-12);
  REQUIRE(records.size() == 5);
  double prev_im = 0.0;
  for (const auto& r : records) {
    CHECK(r.residual < 1e-12);
    CHECK(std::abs(r.root - r.seed) < 0.2);
    CHECK(std::abs(r.root.imag() - kPi * (r.index + 0.5)) < 0.2);
    CHECK(std::abs(r.root.real()) < 1e-10);
    CHECK(r.root.imag() > prev_im);
    prev_im = r.root.imag();
  }
  // n = 0 displacement is of the size (1/2) e^{-pi sqrt3/2} = 0.0329...
  const double disp = std::abs(records[0].root - records[0].seed);
  CHECK(disp > 0.5 * 0.0329);
  CHECK(disp < 2.0 * 0.0329);
}

TEST_CASE("basin bound holds empirically out to n = 20") {
  const auto records = triprod::find_roots_upper(20, 1e-12);
  for (const auto& r : records) CHECK(std::abs(r.root - r.seed) < 0.2);
}

TEST_CASE("n = 0 root agrees with the grid-refinement oracle") {
  const auto records = triprod::find_roots_upper(1, 1e-13);
  const ComplexValue oracle = grid_refine_root();
  CHECK(std::abs(records[0].root - oracle) < 1e-10);
}

TEST_CASE("winding count on simple maps") {
  CHECK(triprod::winding_count([](ComplexValue z) { return z; }, circle(1.0), 2000) == 1);
  CHECK(triprod::winding_count([](ComplexValue) { return ComplexValue(1.0, 0.0); },
                               circle(2.0), 2000) == 0);
  CHECK(triprod::winding_count([](ComplexValue z) { return z * z * z; }, circle(1.5),
                               2000) == 3);
}

TEST_CASE("winding equals root count on the radius pi N semicircle") {
  for (int N : {1, 2, 3, 5}) {
    const auto records = triprod::find_roots_upper(N, 1e-12);
    for (const auto& r : records) CHECK(std::abs(r.root) < kPi * N);
    const int w = triprod::winding_count(triprod::exp_cosh,
                                         triprod::semicircle_contour(kPi * N),
                                         std::max(2000, 1200 * N));
    CHECK(w == N);
  }
}

TEST_CASE("winding guards") {
  CHECK_THROWS_AS(triprod::winding_count([](ComplexValue z) { return z; }, circle(1.0),
                                         500),
                  triprod::DomainError);
  // contour passing through a zero of F
  Contour through_zero;
  through_zero.vertices = {{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}};
  CHECK_THROWS_AS(
      triprod::winding_count([](ComplexValue z) { return z - ComplexValue(1.0, 0.0); },
                             through_zero, 2048),
      triprod::NearZeroOnContour);
  // a phase jump that bisection cannot settle
  CHECK_THROWS_AS(triprod::winding_count(
                      [](ComplexValue z) {
                        return z.real() >= 0.0 ? ComplexValue(1.0, 1e-4)
                                               : ComplexValue(-1.0, 1e-4);
                      },
                      circle(1.0), 2000),
                  triprod::AmbiguousWinding);
}

TEST_CASE("ray symmetry of located roots") {
  const auto records = triprod::find_roots_upper(5, 1e-12);
  const auto rep = triprod::ray_symmetry_check(records, 1e-10);
  CHECK(rep.pass);
  CHECK(rep.roots_checked == 5);
  CHECK(rep.max_rotated_residual < 1e-10);
  CHECK(rep.max_axis_offset < 1e-10);
  // for the n = 0 root even the raw residual at the rotated points is tiny
  CHECK(std::abs(triprod::exp_cosh(triprod::kOmega * records[0].root)) < 1e-10);
  CHECK(std::abs(triprod::exp_cosh(triprod::kOmegaBar * records[0].root)) < 1e-10);
}

TEST_CASE("rotated roots re-converge in place") {
  const auto records = triprod::find_roots_upper(1, 1e-13);
  for (const ComplexValue w : {triprod::kOmega * records[0].root,
                               triprod::kOmegaBar * records[0].root}) {
    ComplexValue z = w;
    for (int i = 0; i < 8; ++i) z -= triprod::exp_cosh(z) / triprod::exp_cosh_prime(z);
    CHECK(std::abs(triprod::exp_cosh(z)) < 1e-12);
    CHECK(std::abs(z - w) < 1e-10);
  }
}
