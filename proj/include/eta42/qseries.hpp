#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "eta42/rational.hpp"

namespace eta42 {

/// Truncated power series Σ_{n=0}^{T} a_n q^n with exact rational coefficients.
///
/// Coefficients past the truncation order are unknown, not zero: at() throws
/// for n > T. Binary operations truncate to the smaller of the two orders.
class QSeries {
 public:
  /// The zero series at order T.
  explicit QSeries(std::size_t truncation);
  /// Takes coefficients a_0..a_T; T = coeffs.size() - 1. Throws if empty.
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries constant(const Rational& c, std::size_t truncation);

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const Rational& at(std::size_t n) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Same series cut down to order T (T must not exceed the current order).
  QSeries truncated(std::size_t truncation) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, const QSeries& a);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product, truncated at min(T_a, T_b).
QSeries mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse. Throws std::domain_error when the constant term is
/// zero; `name` is used in the message.
QSeries invert(const QSeries& a, const std::string& name = "series");

/// a^e for e >= 0 by repeated squaring.
QSeries power(const QSeries& a, unsigned exponent);

/// a(q^t) at the same truncation order as a.
QSeries substitute_power(const QSeries& a, std::size_t t);

/// q^e · a, keeping the truncation order (high coefficients fall off).
QSeries shift(const QSeries& a, std::size_t e);

/// {"truncation": T, "coeffs": ["p/q", ...]}
nlohmann::json to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

/// Human-readable "1 - 24*q + ... + O(q^T+1)" form, nonzero terms only.
std::string to_display_string(const QSeries& s);

}  // namespace eta42
