#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "triprod/errors.hpp"
#include "triprod/product.hpp"

using triprod::ComplexValue;
using triprod::kOmega;
using triprod::kPi;
using triprod::kSqrt3;
using triprod::ProductParams;

TEST_CASE("P_b(0) = 1") {
  for (double b : {0.5, 1.0, 2.0}) {
    const ComplexValue v = product_gamma_form(ProductParams(b), {0.0, 0.0});
    CHECK(std::abs(v - ComplexValue(1.0, 0.0)) < 1e-14);
  }
}

TEST_CASE("P_1(1) against the cosh closed form") {
  // prod_{k>=1} (1 + 1/k^3) = cosh(pi sqrt3/2)/pi, so P_1(1) = pi/cosh(pi sqrt3/2).
  const double expected = kPi / std::cosh(kPi * kSqrt3 / 2.0);
  const ComplexValue v = product_gamma_form(ProductParams(1.0), {1.0, 0.0});
  CHECK(std::abs(v.real() - expected) < 1e-12);
  CHECK(std::abs(v.imag()) < 1e-14);

  const auto trunc = product_truncated(ProductParams(1.0), {1.0, 0.0}, 100000);
  CHECK(std::abs(trunc.value.real() - expected) <= expected * trunc.tail_rel + 1e-12);
}

TEST_CASE("gamma form vs brute-force truncation at b = 1/2, z = 0.3") {
  const ProductParams p(0.5);
  const ComplexValue z{0.3, 0.0};
  const auto trunc = product_truncated(p, z, 1000000);
  const ComplexValue v = product_gamma_form(p, z);
  CHECK(std::abs(v - trunc.value) <= std::abs(v) * (trunc.tail_rel + 1e-11));
}

TEST_CASE("truncated product basics") {
  const auto unit = product_truncated(ProductParams(2.0), {0.0, 0.0}, 17);
  CHECK(unit.value == ComplexValue(1.0, 0.0));
  CHECK(unit.tail_rel == 0.0);

  // 1 + (-2)^3/(1+1)^3 = 0 at k = 1
  try {
    product_truncated(ProductParams(1.0), {-2.0, 0.0}, 10);
    FAIL("expected ZeroFactor");
  } catch (const triprod::ZeroFactor& e) {
    CHECK(e.k == 1);
  }

  CHECK_THROWS_AS(product_truncated(ProductParams(1.0), {1.0, 0.0}, 0),
                  triprod::DomainError);
}

TEST_CASE("pole reporting in the gamma form") {
  // b + z = -3
  CHECK_THROWS_AS(product_gamma_form(ProductParams(1.0), {-4.0, 0.0}),
                  triprod::PoleError);
  CHECK_NOTHROW(product_gamma_form(ProductParams(1.0), {-3.5, 0.0}));
}

TEST_CASE("rotation symmetry P_b(z) = P_b(omega z)") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (double b : {0.5, 1.0, 2.0}) {
    const ProductParams p(b);
    for (int i = 0; i < 60; ++i) {
      ComplexValue z{u(rng), u(rng)};
      ComplexValue a = product_gamma_form(p, z);
      ComplexValue c = product_gamma_form(p, kOmega * z);
      CHECK(std::abs(a - c) <= 1e-11 * std::abs(a));
    }
  }
}

TEST_CASE("conjugation symmetry") {
  std::mt19937 rng(321);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const ProductParams p(1.0);
  for (int i = 0; i < 60; ++i) {
    ComplexValue z{u(rng), u(rng)};
    ComplexValue a = product_gamma_form(p, std::conj(z));
    ComplexValue c = std::conj(product_gamma_form(p, z));
    CHECK(std::abs(a - c) <= 1e-11 * std::abs(a));
  }
}

TEST_CASE("oracle equivalence on random points |z| <= 5") {
  std::mt19937 rng(5150);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double b : {0.5, 1.0, 2.0}) {
    const ProductParams p(b);
    int done = 0;
    while (done < 100) {
      ComplexValue z{5.0 * u(rng), 5.0 * u(rng)};
      if (std::abs(z) > 5.0) continue;
      ++done;
      triprod::TruncatedProduct trunc{};
      try {
        trunc = product_truncated(p, z, 100000);
      } catch (const triprod::ZeroFactor&) {
        continue;  // z happened to sit on a factor zero
      }
      const ComplexValue v = product_gamma_form(p, z);
      const double budget = std::abs(v) * (trunc.tail_rel + 1e-10);
      CHECK(std::abs(v - trunc.value) <= budget);
    }
  }
}

TEST_CASE("decay law on the positive real axis, b = 1") {
  const ProductParams p(1.0);
  auto scaled = [&](double x) {
    const ComplexValue v = product_gamma_form(p, {x, 0.0});
    return std::abs(v) * std::exp(2.0 * kPi * x / kSqrt3) / std::pow(x, 1.5);
  };
  const double r20 = scaled(20.0), r40 = scaled(40.0);
  CHECK(std::abs(r20 - r40) < 0.10 * std::abs(r40));
}

TEST_CASE("asymptotic magnitude model") {
  const ProductParams p(1.0);
  // ratio |P_1| / model constant along the pi/6 ray
  auto ratio = [&](double r) {
    const ComplexValue z = r * std::exp(ComplexValue(0.0, kPi / 6.0));
    return std::abs(product_gamma_form(p, z)) / asymptotic_mag(p, z);
  };
  const double q20 = ratio(20.0), q40 = ratio(40.0);
  CHECK(std::abs(q20 - q40) < 0.10 * std::abs(q40));

  // stated exponents at arg z = pi/2 and on the real axis
  const ComplexValue iy{0.0, 9.0};
  CHECK(std::abs(asymptotic_mag(p, iy) - std::pow(9.0, 1.5) * std::exp(-kPi * 9.0)) <
        1e-12 * std::pow(9.0, 1.5) * std::exp(-kPi * 9.0));
  const ComplexValue xr{9.0, 0.0};
  CHECK(std::abs(asymptotic_mag(p, xr) -
                 std::pow(9.0, 1.5) * std::exp(-2.0 * kPi * 9.0 / kSqrt3)) <
        1e-12 * std::pow(9.0, 1.5) * std::exp(-2.0 * kPi * 9.0 / kSqrt3));
}

TEST_CASE("asymptotic magnitude domain errors") {
  const ProductParams p(1.0);
  CHECK_THROWS_AS(asymptotic_mag(p, {3.0, 0.0}), triprod::DomainError);   // |z| < 5
  CHECK_THROWS_AS(asymptotic_mag(p, {9.0, -1.0}), triprod::DomainError);  // arg < 0
  CHECK_THROWS_AS(asymptotic_mag(p, {-9.0, 1.0}), triprod::DomainError);  // arg > 2pi/3
}

TEST_CASE("b must be positive") {
  CHECK_THROWS_AS(ProductParams(0.0), triprod::DomainError);
  CHECK_THROWS_AS(ProductParams(-1.0), triprod::DomainError);
}
