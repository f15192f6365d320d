#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eta42/audit.hpp"

namespace eta42 {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::size_t verify_order = 300;
  std::string printed_path = PrintedCoefficients::default_path();
};

struct AcceptanceOutcome {
  std::vector<CriterionResult> criteria;
  /// Diff of derived coefficients against the printed tables.
  nlohmann::json audit;
  bool all_passed() const;
};

/// Every derived coefficient set compared against the printed tables:
/// basis decompositions, coefficientwise forms, the four W formulas plus
/// W_{1,14}, and the N14 formula in both its expanded and compact forms.
std::vector<AuditEntry> audit_against_print(const PrintedCoefficients& printed, const Basis42& basis);

/// Runs criteria 1-7. Criterion 7 passes iff 1-6 pass; the diff contents
/// never affect the outcome.
AcceptanceOutcome run_acceptance(const AcceptanceOptions& options);

nlohmann::json to_json(const AcceptanceOutcome& outcome);

}  // namespace eta42
