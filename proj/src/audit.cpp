#include "eta42/audit.hpp"

#include <fstream>
#include <stdexcept>

#ifndef ETA42_DATA_DIR
#define ETA42_DATA_DIR "data"
#endif

namespace eta42 {

namespace {

std::string pair_key(std::uint64_t r, std::uint64_t s) { return std::to_string(r) + "," + std::to_string(s); }

std::map<std::string, Rational> rational_map(const nlohmann::json& j) {
  std::map<std::string, Rational> out;
  for (const auto& [label, value] : j.items()) {
    if (label.starts_with("_")) continue;
    out.emplace(label, parse_rational(value.get<std::string>()));
  }
  return out;
}

}  // namespace

PrintedCoefficients PrintedCoefficients::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open printed coefficient file '" + path + "'");
  PrintedCoefficients p;
  p.document = nlohmann::json::parse(in);
  return p;
}

std::string PrintedCoefficients::default_path() { return std::string(ETA42_DATA_DIR) + "/printed_coefficients.json"; }

bool PrintedCoefficients::has_pair(std::uint64_t r, std::uint64_t s) const {
  return document.at("convolution_formulas").contains(pair_key(r, s));
}

std::map<std::string, Rational> PrintedCoefficients::basis_decomposition(std::uint64_t r, std::uint64_t s) const {
  return rational_map(document.at("basis_decomposition").at(pair_key(r, s)));
}

std::map<std::string, Rational> PrintedCoefficients::coefficientwise(std::uint64_t r, std::uint64_t s) const {
  return rational_map(document.at("coefficientwise").at(pair_key(r, s)));
}

DivisorFormula PrintedCoefficients::convolution_formula(std::uint64_t r, std::uint64_t s) const {
  return divisor_formula_from_json(document.at("convolution_formulas").at(pair_key(r, s)));
}

DivisorFormula PrintedCoefficients::n14_formula() const {
  return divisor_formula_from_json(document.at("n14_formula"));
}

std::vector<RepTableRow> PrintedCoefficients::n14_table() const {
  std::vector<RepTableRow> rows;
  for (const auto& row : document.at("n14_table")) {
    rows.push_back({row.at("n").get<std::uint64_t>(), Integer(row.at("N14").get<long>()),
                    Integer(row.at("sigma3").get<long>()), Integer(row.at("u").get<long>()),
                    Integer(row.at("S14").get<long>())});
  }
  return rows;
}

bool AuditEntry::matches() const {
  const Rational d = derived.value_or(Rational(0));
  const Rational p = printed.value_or(Rational(0));
  return d == p;
}

std::vector<AuditEntry> diff_labelled(const std::string& section, const std::map<std::string, Rational>& derived,
                                      const std::map<std::string, Rational>& printed) {
  std::map<std::string, AuditEntry> merged;
  for (const auto& [label, v] : derived) {
    auto& e = merged[label];
    e.section = section;
    e.label = label;
    e.derived = v;
  }
  for (const auto& [label, v] : printed) {
    auto& e = merged[label];
    e.section = section;
    e.label = label;
    e.printed = v;
  }
  std::vector<AuditEntry> entries;
  for (auto& [label, e] : merged) {
    // Zero on one side and absent on the other is agreement, not worth a row.
    if (e.matches() && (!e.derived || !e.printed)) continue;
    entries.push_back(std::move(e));
  }
  return entries;
}

std::map<std::string, Rational> flatten(const DivisorFormula& f) {
  std::map<std::string, Rational> out;
  for (const auto& [t, c] : f.sigma3) out["sigma3@" + std::to_string(t)] = c;
  for (const auto& [u, c] : f.sigma1) {
    out["linear@" + std::to_string(u) + ".constant"] = c.constant;
    out["linear@" + std::to_string(u) + ".slope"] = c.slope;
  }
  for (const auto& [term, c] : f.cusp) out[cusp_term_label(term)] = c;
  return out;
}

std::vector<AuditEntry> diff_formulas(const std::string& section, const DivisorFormula& derived,
                                      const DivisorFormula& printed) {
  return diff_labelled(section, flatten(derived), flatten(printed));
}

std::map<std::string, Rational> labelled_basis_coefficients(const IdentitySolution& sol) {
  std::map<std::string, Rational> out;
  for (const auto& [t, v] : sol.x) out["E4@" + std::to_string(t)] = v;
  for (const auto& [k, v] : sol.y) out["C@" + std::to_string(k)] = v;
  return out;
}

std::map<std::string, Rational> labelled_coefficientwise(const IdentitySolution& sol) {
  std::map<std::string, Rational> out;
  const Rational gap = Rational(sol.s) - Rational(sol.r);
  out["constant"] = gap * gap;
  for (const auto& [t, v] : sol.x) out["sigma3@" + std::to_string(t)] = 240 * v;
  for (const auto& [k, v] : sol.y) out["c@" + std::to_string(k)] = v;
  return out;
}

nlohmann::json audit_report(const std::vector<AuditEntry>& entries) {
  nlohmann::json list = nlohmann::json::array();
  std::size_t mismatches = 0;
  for (const auto& e : entries) {
    const bool ok = e.matches();
    if (!ok) ++mismatches;
    list.push_back({{"section", e.section},
                    {"label", e.label},
                    {"derived", e.derived ? nlohmann::json(to_string(*e.derived)) : nlohmann::json(nullptr)},
                    {"printed", e.printed ? nlohmann::json(to_string(*e.printed)) : nlohmann::json(nullptr)},
                    {"match", ok}});
  }
  return {{"entries", std::move(list)}, {"mismatches", mismatches}};
}

}  // namespace eta42
