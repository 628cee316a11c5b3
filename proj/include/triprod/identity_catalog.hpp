#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triprod/common.hpp"
#include "triprod/quadrature.hpp"

namespace triprod {

/// Ordered named parameters of one verification run (b, a, alpha, ...).
struct ParamSet {
  std::vector<std::pair<std::string, ComplexValue>> values;

  bool has(const std::string& name) const;
  ComplexValue get(const std::string& name) const;         // throws DomainError
  double get_real(const std::string& name) const;          // requires Im == 0
  void set(const std::string& name, ComplexValue v);
  std::string str() const;                                 // "b=0.5, a=0.1+0.1i"
};

/// Left and right side of one identity, computed by independent recipes.
struct EvalOutcome {
  ComplexValue lhs{0.0, 0.0};
  ComplexValue rhs{0.0, 0.0};
  long evaluations = 0;
  bool converged = true;  // false if any underlying quadrature gave up
  std::optional<double> err_override;  // entries with more than one reference
  std::vector<std::pair<std::string, ComplexValue>> extra;  // recorded in the report

  EvalOutcome() = default;
  EvalOutcome(ComplexValue l, ComplexValue r, long e, bool ok)
      : lhs(l), rhs(r), evaluations(e), converged(ok) {}
};

struct IdentityCase {
  std::string id;
  std::string description;
  double tol;
  bool tol_relative;  // pass threshold is tol * |rhs| instead of tol
  std::vector<ParamSet> grid;
  std::function<EvalOutcome(const ParamSet&, const QuadConfig&)> eval;
};

struct IdentityReport {
  std::string id;
  ParamSet params;
  ComplexValue lhs{0.0, 0.0};
  ComplexValue rhs{0.0, 0.0};
  double abs_err = 0.0;
  double tol = 0.0;  // resolved absolute threshold; pass <=> abs_err <= tol
  bool pass = false;
  long evaluations = 0;
  double wall_time_ms = 0.0;
  std::string error;  // non-empty if the computation raised an error
};

/// The registry, in fixed execution order.
const std::vector<IdentityCase>& catalog();

/// Run one registry entry at a single parameter point.
IdentityReport verify_one(const IdentityCase& entry, const ParamSet& params,
                          const QuadConfig& cfg,
                          std::optional<double> tol_override = {});

/// Run one id over its default grid, or over `params` when provided.
/// Throws UnknownIdentity for unregistered ids.
std::vector<IdentityReport> verify(const std::string& id, const QuadConfig& cfg,
                                   std::optional<ParamSet> params = {},
                                   std::optional<double> tol_override = {});

/// Run every entry whose id starts with `filter` (all of them when empty),
/// in registry order with the default parameter grids.
std::vector<IdentityReport> run_all(const QuadConfig& cfg, const std::string& filter = "");

/// Machine-readable document array (one object per report) and the aligned
/// human-readable table.
std::string reports_to_json(const std::vector<IdentityReport>& reports);
std::string reports_to_table(const std::vector<IdentityReport>& reports);

}  // namespace triprod
