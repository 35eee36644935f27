#pragma once

// Check execution and report rendering.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kvv/scenario.hpp"

namespace kvv {

inline constexpr const char* kReportSchema = "kvv-report/1";

struct CheckResult {
  std::string id;
  std::string type;
  bool passed = false;
  Json values = Json::object();  // computed quantities, rationals as strings
  std::vector<std::string> mismatches;
  std::string error;  // set when the check could not be evaluated
  std::string citation;
};

struct Report {
  std::string scenario_name;
  std::string digest;
  std::vector<CheckResult> checks;
  /// Set for explorer runs instead of checks.
  std::optional<Json> exploration;

  bool passed() const;
  /// 0 when every check passed, 1 otherwise.
  int exit_code() const;
  /// First mismatch or error, for one-line diagnostics.
  std::optional<std::string> first_failure() const;
};

/// Evaluates every check of the scenario once, in order. A check that throws
/// is recorded as failed with the error message.
Report run_scenario(const Scenario& scenario);
Report run_scenario(const Scenario& scenario, const BuiltScenario& built);

/// The bundled characteristic-three scenario.
Report run_repro();

/// Builds construction_scenario(p, points), contracts C, the fibres and the
/// (-2)-chains, and reports deg(-K_T) against a general fibre, a verdict
/// (del_pezzo / K_trivial / canonically_ample) and the singular-point census.
/// Throws DomainError for p < 2 or points < 1 and NotContractibleError when
/// C^2 >= 0.
Report explore_frobenius(int p, int points);

Json to_json(const Report& report);
std::string render_text(const Report& report);

enum class ReportFormat { Text, Json };

/// Writes to `path`, or to `out` when path is empty. Throws Error when the
/// file cannot be written.
void emit_report(const Report& report, ReportFormat format, const std::string& path, std::ostream& out);

}  // namespace kvv
