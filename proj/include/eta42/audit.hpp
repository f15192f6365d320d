#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eta42/formula.hpp"
#include "eta42/identities.hpp"
#include "eta42/quadforms.hpp"

namespace eta42 {

/// Printed coefficient tables, loaded from data/printed_coefficients.json.
/// Labels follow the JSON output of solve/derive; an absent label means the
/// printed value is zero.
struct PrintedCoefficients {
  nlohmann::json document;

  static PrintedCoefficients load(const std::string& path);
  /// Path baked in at build time (the source tree's data/ directory).
  static std::string default_path();

  bool has_pair(std::uint64_t r, std::uint64_t s) const;
  /// Basis coefficients {"E4@t", "C@k"} for the pair.
  std::map<std::string, Rational> basis_decomposition(std::uint64_t r, std::uint64_t s) const;
  /// Constant term plus "sigma3@t", "c@k" coefficientwise form.
  std::map<std::string, Rational> coefficientwise(std::uint64_t r, std::uint64_t s) const;
  DivisorFormula convolution_formula(std::uint64_t r, std::uint64_t s) const;
  DivisorFormula n14_formula() const;
  std::vector<RepTableRow> n14_table() const;
};

struct AuditEntry {
  std::string section;  // e.g. "basis_decomposition 1,42"
  std::string label;
  std::optional<Rational> derived;
  std::optional<Rational> printed;
  bool matches() const;
};

/// Compares two label -> value maps; a missing side counts as zero.
std::vector<AuditEntry> diff_labelled(const std::string& section, const std::map<std::string, Rational>& derived,
                                      const std::map<std::string, Rational>& printed);
std::vector<AuditEntry> diff_formulas(const std::string& section, const DivisorFormula& derived,
                                      const DivisorFormula& printed);

/// Flattens a formula into scalar labels ("linear@u.constant", "linear@u.slope").
std::map<std::string, Rational> flatten(const DivisorFormula& f);

std::map<std::string, Rational> labelled_basis_coefficients(const IdentitySolution& sol);
/// Constant term (r - s)^2, 240 x_t on σ3(n/t), y_k on c_k(n).
std::map<std::string, Rational> labelled_coefficientwise(const IdentitySolution& sol);

/// {"entries": [...], "mismatches": count}
nlohmann::json audit_report(const std::vector<AuditEntry>& entries);

}  // namespace eta42
