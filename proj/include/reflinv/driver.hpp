#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reflinv/klein.hpp"
#include "reflinv/listed.hpp"

namespace reflinv {

struct CheckReport {
  std::string name;
  bool pass = false;
  /// Exact value backing the verdict, rendered in the field grammar.
  std::string witness;
  double seconds = 0;
  /// Acceptance criterion the check belongs to; 0 for supporting checks.
  int criterion = 0;
};

/// Human-readable rendering, e.g. "x0^2 - 1/2*i*x1*x3".
std::string pretty(const MPoly& p);

CheckReport check_invariance(const MPoly& p, const std::vector<SO4Element>& gens);

/// Passes iff d does not divide p; with witness points, also requires d(pt) = 0 and p(pt) != 0.
CheckReport check_nondivisibility(const MPoly& p, const MPoly& d, const std::vector<Point4>& witness_points = {});

/// Fixed evaluation point for the Jacobian certificate.
inline const Point4& jacobian_point() {
  static const Point4 pt{1, 2, 3, 5};
  return pt;
}

CheckReport check_jacobian_independence(const std::array<MPoly, 4>& polys);

/// Product of degrees equals |g| and the Molien series agrees with 1/prod(1 - t^d) through the given degree
/// (default: the largest degree).
CheckReport check_degrees(const MatrixGroup& g, const std::vector<unsigned>& degrees, unsigned through = 0);

enum class Scope { Quick, Full };

Scope parse_scope(const std::string& s);

struct SuiteOptions {
  Scope scope = Scope::Quick;
  /// Only checks whose name starts with this prefix run.
  std::string filter;
  /// Remaining checks fail once this many seconds have elapsed.
  double budget_seconds = 3600;
  /// Called after each check, e.g. for progress output.
  std::function<void(const CheckReport&)> on_report;
};

/// REFLINV_BUDGET_SECONDS, or 3600 when unset or malformed.
double budget_from_environment();

/// Names of every check in the given scope, in run order.
std::vector<std::string> suite_check_names(Scope scope);

/// Runs the checks in name order; results are exact and deterministic apart from timings.
std::vector<CheckReport> run_suite(const SuiteOptions& options);

std::string report_text(const std::vector<CheckReport>& reports, bool with_timing = true);
nlohmann::json report_json(const std::vector<CheckReport>& reports, bool with_timing = true);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace reflinv
