#include "triprod/roots.hpp"

#include <cmath>
#include <string>

#include "triprod/errors.hpp"

namespace triprod {

namespace {

constexpr double kBasinRadius = 0.2;
constexpr double kNearZero = 1e-12;

// Uniform-in-length point lookup on a closed polyline.
class PolylinePath {
 public:
  explicit PolylinePath(const Contour& c) : pts_(c.vertices) {
    if (pts_.size() < 2) throw DomainError("winding_count: contour needs >= 2 vertices");
    cum_.resize(pts_.size() + 1, 0.0);
    for (size_t i = 0; i < pts_.size(); ++i) {
      const ComplexValue a = pts_[i];
      const ComplexValue b = pts_[(i + 1) % pts_.size()];
      cum_[i + 1] = cum_[i] + std::abs(b - a);
    }
    if (!(cum_.back() > 0.0)) throw DomainError("winding_count: degenerate contour");
  }

  ComplexValue point(double t) const {  // t in [0, 1], wraps
    t -= std::floor(t);
    const double s = t * cum_.back();
    size_t lo = 0, hi = pts_.size();
    while (lo + 1 < hi) {
      const size_t mid = (lo + hi) / 2;
      if (cum_[mid] <= s) lo = mid; else hi = mid;
    }
    const ComplexValue a = pts_[lo];
    const ComplexValue b = pts_[(lo + 1) % pts_.size()];
    const double seg = cum_[lo + 1] - cum_[lo];
    const double frac = (seg > 0.0) ? (s - cum_[lo]) / seg : 0.0;
    return a + frac * (b - a);
  }

 private:
  std::vector<ComplexValue> pts_;
  std::vector<double> cum_;
};

ComplexValue checked_eval(const std::function<ComplexValue(ComplexValue)>& F,
                          ComplexValue z) {
  const ComplexValue v = F(z);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NonFinite("winding_count: F returned a non-finite value on the contour");
  if (std::abs(v) < kNearZero)
    throw NearZeroOnContour("winding_count: |F| < 1e-12 at a contour sample");
  return v;
}

// Argument change over [t0, t1], bisecting until each step rotates by less
// than pi/2 (prevents silent 2 pi slips near a close root).
double arg_step(const std::function<ComplexValue(ComplexValue)>& F,
                const PolylinePath& path, double t0, double t1,
                ComplexValue f0, ComplexValue f1, int depth) {
  const double d = std::arg(f1 / f0);
  if (std::abs(d) < kPi / 2.0) return d;
  if (depth > 48)
    throw AmbiguousWinding("winding_count: argument step would not settle under bisection");
  const double tm = 0.5 * (t0 + t1);
  const ComplexValue fm = checked_eval(F, path.point(tm));
  return arg_step(F, path, t0, tm, f0, fm, depth + 1) +
         arg_step(F, path, tm, t1, fm, f1, depth + 1);
}

}  // namespace

ComplexValue exp_cosh(ComplexValue z) {
  return std::exp(ComplexValue(0.0, kSqrt3) * z) + 2.0 * std::cosh(z);
}

ComplexValue exp_cosh_prime(ComplexValue z) {
  return ComplexValue(0.0, kSqrt3) * std::exp(ComplexValue(0.0, kSqrt3) * z) +
         2.0 * std::sinh(z);
}

std::vector<RootRecord> find_roots_upper(int N, double tol) {
  if (N < 1) throw DomainError("find_roots_upper: N must be >= 1");
  if (!(tol > 0.0)) throw DomainError("find_roots_upper: tol must be positive");
  std::vector<RootRecord> records;
  records.reserve(N);
  for (int n = 0; n < N; ++n) {
    const ComplexValue seed{0.0, kPi * (n + 0.5)};
    ComplexValue z = seed;
    ComplexValue fz = exp_cosh(z);
    int it = 0;
    while (std::abs(fz) >= tol && it < 100) {
      z -= fz / exp_cosh_prime(z);
      fz = exp_cosh(z);
      ++it;
    }
    if (std::abs(fz) >= tol)
      throw NoConvergence("find_roots_upper: Newton failed for n = " + std::to_string(n));
    if (std::abs(z - seed) >= kBasinRadius)
      throw NoConvergence("find_roots_upper: iterate left the seed basin for n = " +
                          std::to_string(n));
    records.push_back({n, seed, z, std::abs(fz), it});
  }
  return records;
}

Contour semicircle_contour(double R, int arc_segments) {
  if (!(R > 0.0)) throw DomainError("semicircle_contour: R must be positive");
  if (arc_segments < 8) throw DomainError("semicircle_contour: too few arc segments");
  Contour c;
  c.vertices.reserve(arc_segments + 1);
  c.vertices.emplace_back(-R, 0.0);
  c.vertices.emplace_back(R, 0.0);
  for (int j = 1; j < arc_segments; ++j) {
    const double th = kPi * j / arc_segments;
    c.vertices.emplace_back(R * std::cos(th), R * std::sin(th));
  }
  return c;
}

int winding_count(const std::function<ComplexValue(ComplexValue)>& F,
                  const Contour& contour, int samples) {
  if (samples < 2000) throw DomainError("winding_count: samples must be >= 2000");
  const PolylinePath path(contour);

  double total = 0.0;
  ComplexValue fprev = checked_eval(F, path.point(0.0));
  for (int j = 1; j <= samples; ++j) {
    const double t0 = static_cast<double>(j - 1) / samples;
    const double t1 = static_cast<double>(j) / samples;
    const ComplexValue fcur = checked_eval(F, path.point(t1));
    total += arg_step(F, path, t0, t1, fprev, fcur, 0);
    fprev = fcur;
  }

  const double raw = total / (2.0 * kPi);
  const long nearest = std::lround(raw);
  if (std::abs(raw - static_cast<double>(nearest)) > 0.1)
    throw AmbiguousWinding("winding_count: raw winding " + std::to_string(raw) +
                           " is > 0.1 from an integer; increase samples");
  return static_cast<int>(nearest);
}

SymmetryReport ray_symmetry_check(const std::vector<RootRecord>& records, double tol) {
  if (records.empty()) throw DomainError("ray_symmetry_check: no records");
  SymmetryReport rep;
  for (const auto& rec : records) {
    // |F'| grows like e^{sqrt3 |r|/2} along the rotated rays, so the raw
    // residual is unattainable for higher roots in double precision; the
    // Newton displacement |F|/|F'| is the scale-free residual.
    const ComplexValue r1 = kOmega * rec.root;
    const ComplexValue r2 = kOmegaBar * rec.root;
    const double rot1 =
        std::abs(exp_cosh(r1)) / std::max(1.0, std::abs(exp_cosh_prime(r1)));
    const double rot2 =
        std::abs(exp_cosh(r2)) / std::max(1.0, std::abs(exp_cosh_prime(r2)));
    const double axis = std::abs(rec.root.real());
    rep.max_rotated_residual = std::max({rep.max_rotated_residual, rot1, rot2});
    rep.max_axis_offset = std::max(rep.max_axis_offset, axis);
    if (rot1 >= tol || rot2 >= tol || axis >= tol)
      throw SymmetryViolation("ray_symmetry_check: root n = " + std::to_string(rec.index) +
                              " fails the omega-rotation/axis check");
    ++rep.roots_checked;
  }
  rep.pass = true;
  return rep;
}

}  // namespace triprod
