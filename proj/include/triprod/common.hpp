#pragma once

#include <complex>

namespace triprod {

/// Universal scalar for integrands, Gamma values and roots.
using ComplexValue = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt3 = 1.7320508075688772935;
inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kLnPi = 1.1447298858494001741;
inline constexpr double kHalfLn2Pi = 0.91893853320467274178;  // ln(2*pi)/2

// Primitive cube root of unity e^{2*pi*i/3} and its inverse 1/omega = conj(omega).
inline const ComplexValue kOmega{-0.5, kSqrt3 / 2.0};
inline const ComplexValue kOmegaBar{-0.5, -kSqrt3 / 2.0};

}  // namespace triprod
