#pragma once

#include <stdexcept>
#include <string>

namespace triprod {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's stated domain.
struct DomainError : Error {
  using Error::Error;
};

/// Evaluation point too close to a pole of a Gamma factor.
struct PoleError : Error {
  using Error::Error;
};

/// Iteration or series failed to reach the requested tolerance.
struct NoConvergence : Error {
  using Error::Error;
};

/// A computation produced (or received) a non-finite value.
struct NonFinite : Error {
  using Error::Error;
};

/// A factor of a truncated product vanished; `k` is the offending index.
struct ZeroFactor : Error {
  int k;
  ZeroFactor(int k_, const std::string& msg) : Error(msg), k(k_) {}
};

/// |F| fell below the safety threshold at a contour sample.
struct NearZeroOnContour : Error {
  using Error::Error;
};

/// Accumulated winding is too far from an integer.
struct AmbiguousWinding : Error {
  using Error::Error;
};

/// A root failed its rotation/axis symmetry check.
struct SymmetryViolation : Error {
  using Error::Error;
};

/// Identity id not present in the catalog.
struct UnknownIdentity : Error {
  using Error::Error;
};

}  // namespace triprod
