#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include <json.hpp>

#include "eta42/etaforms.hpp"
#include "eta42/rational.hpp"

namespace eta42 {

/// (constant + slope·n), the multiplier of a σ(n/u) term.
struct LinearCoefficient {
  Rational constant;
  Rational slope;
  friend bool operator==(const LinearCoefficient&, const LinearCoefficient&) = default;
};

/// c_k(n/divisor).
struct CuspTerm {
  std::size_t k = 1;
  std::uint64_t divisor = 1;
  friend auto operator<=>(const CuspTerm&, const CuspTerm&) = default;
};

/// An arithmetic function of n built from divisor sums and cusp coefficients:
///
///   Σ_t A_t σ3(n/t) + Σ_u (a_u + b_u n) σ(n/u) + Σ_{k,m} C_{k,m} c_k(n/m)
///
/// Every term vanishes when its argument is not a positive integer.
class DivisorFormula {
 public:
  std::map<std::uint64_t, Rational> sigma3;
  std::map<std::uint64_t, LinearCoefficient> sigma1;
  std::map<CuspTerm, Rational> cusp;

  DivisorFormula& operator+=(const DivisorFormula& other);
  friend DivisorFormula operator*(const Rational& c, const DivisorFormula& f);
  friend DivisorFormula operator+(DivisorFormula a, const DivisorFormula& b) { return a += b; }
  friend bool operator==(const DivisorFormula&, const DivisorFormula&) = default;

  /// The formula for f(n/m): every argument divisor is multiplied by m and
  /// slopes are divided by m.
  DivisorFormula at_fraction(std::uint64_t m) const;

  /// Drops every zero coefficient.
  void prune();

  /// Throws std::out_of_range if some c_k(n/m) lies beyond the expansions.
  Rational evaluate(std::uint64_t n, const CuspExpansions& cusp_forms) const;
};

/// Labels: "sigma3@t", "linear@u" -> {"constant", "slope"}, "c@k" for c_k(n),
/// "c@k/m" for c_k(n/m).
nlohmann::json to_json(const DivisorFormula& f);
DivisorFormula divisor_formula_from_json(const nlohmann::json& j);

std::string cusp_term_label(const CuspTerm& term);

}  // namespace eta42
