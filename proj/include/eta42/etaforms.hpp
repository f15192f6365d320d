#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eta42/qseries.hpp"

namespace eta42 {

/// An eta quotient Π_{δ | N} η^{r_δ}(δz) at level N.
class EtaQuotientSpec {
 public:
  /// Throws std::invalid_argument if a key does not divide the level, if the
  /// level is zero, or if no exponent is nonzero. Zero exponents are dropped.
  EtaQuotientSpec(std::uint64_t level, std::map<std::uint64_t, int> exponents);

  std::uint64_t level() const { return level_; }
  const std::map<std::uint64_t, int>& exponents() const { return exponents_; }

  /// Σ δ·r_δ (24 times the order of vanishing at infinity).
  std::int64_t weighted_sum() const;
  /// Σ r_δ (twice the weight).
  std::int64_t exponent_sum() const;

  friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;

 private:
  std::uint64_t level_;
  std::map<std::uint64_t, int> exponents_;
};

/// Parses "N: δ^r δ^r ...", e.g. "42: 1^5 2^-1 7^5 14^-1". A bare "δ" means
/// exponent 1.
EtaQuotientSpec parse_eta_spec(std::string_view text);
std::string to_string(const EtaQuotientSpec& spec);

enum class Verdict { NotModular, ModularForm, CuspForm };
std::string_view to_string(Verdict v);

/// Outcome of the Ligozat criteria for an eta quotient.
struct LigozatReport {
  bool condition_i = false;    // Σ δ r_δ ≡ 0 (mod 24)
  bool condition_ii = false;   // Σ (N/δ) r_δ ≡ 0 (mod 24)
  bool condition_iii = false;  // Π δ^{r_δ} is a rational square
  bool condition_iv = false;   // order at every cusp d | N is >= 0
  bool condition_iv_strict = false;
  bool condition_v = false;    // k = Σ r_δ / 2 is an even integer
  /// Σ r_δ / 2 rounded toward zero; meaningful only when condition_v holds.
  std::int64_t weight = 0;
  /// Per-cusp values Σ gcd(d,δ)² r_δ / δ, keyed by d.
  std::map<std::uint64_t, Rational> cusp_orders;
  Verdict verdict = Verdict::NotModular;
};

LigozatReport check_ligozat(const EtaQuotientSpec& spec);
nlohmann::json to_json(const LigozatReport& report);

/// Π_{n>=1} (1 - q^n) truncated at order T.
QSeries euler_series(std::size_t truncation);

/// q^e Π_δ (Π_n (1 - q^{δn}))^{r_δ} with e = Σ δ r_δ / 24, truncated at T.
/// Throws std::domain_error when e is fractional or negative.
QSeries eta_quotient_series(const EtaQuotientSpec& spec, std::size_t truncation);

enum class EisensteinKind { E2, E4 };

/// E2(q^t) = 1 - 24 Σ σ(n) q^{tn} or E4(q^t) = 1 + 240 Σ σ3(n) q^{tn}.
QSeries eisenstein(EisensteinKind kind, std::size_t t, std::size_t truncation);

inline constexpr std::size_t kCuspFormCount = 20;

/// The twenty weight-4 cusp forms C_1..C_20 on Γ0(42), index 0 holding C_1.
const std::array<EtaQuotientSpec, kCuspFormCount>& cusp_form_family();

/// q-expansions of C_1..C_20 at a shared truncation, with c_k(n) lookups.
class CuspExpansions {
 public:
  explicit CuspExpansions(std::size_t truncation);

  std::size_t truncation() const { return truncation_; }
  /// Expansion of C_k, k in 1..20.
  const QSeries& series(std::size_t k) const;
  /// c_k(n) for n in 0..T (c_k(0) = 0).
  const Rational& coefficient(std::size_t k, std::size_t n) const;
  /// c_k(n/m): zero when m does not divide n, else c_k(n/m). Throws
  /// std::out_of_range when n/m exceeds the truncation.
  Rational coefficient_at_fraction(std::size_t k, std::uint64_t n, std::uint64_t m) const;

 private:
  std::size_t truncation_;
  std::vector<QSeries> series_;
};

}  // namespace eta42
