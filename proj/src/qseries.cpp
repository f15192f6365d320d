#include "eta42/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eta42 {

QSeries::QSeries(std::size_t truncation) : coeffs_(truncation + 1) {}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least one coefficient");
}

QSeries QSeries::constant(const Rational& c, std::size_t truncation) {
  QSeries s(truncation);
  s.coeffs_[0] = c;
  return s;
}

const Rational& QSeries::at(std::size_t n) const {
  if (n > truncation()) {
    throw std::out_of_range("coefficient q^" + std::to_string(n) + " requested beyond truncation order " +
                            std::to_string(truncation()));
  }
  return coeffs_[n];
}

QSeries QSeries::truncated(std::size_t truncation) const {
  if (truncation > this->truncation()) {
    throw std::out_of_range("cannot extend a series from order " + std::to_string(this->truncation()) + " to " +
                            std::to_string(truncation));
  }
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + truncation + 1));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.truncation(), b.truncation()));
  for (std::size_t n = 0; n < r.coeffs_.size(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.truncation(), b.truncation()));
  for (std::size_t n = 0; n < r.coeffs_.size(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return r;
}

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries r(a.truncation());
  for (std::size_t n = 0; n < r.coeffs_.size(); ++n) r.coeffs_[n] = c * a.coeffs_[n];
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t order = std::min(a.truncation(), b.truncation());
  QSeries r(order);
  Rational term;
  // Eta products and substituted series are sparse, so skip zero factors.
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      term = a.coeffs_[i] * b.coeffs_[j];
      r.coeffs_[i + j] += term;
    }
  }
  return r;
}

QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries invert(const QSeries& a, const std::string& name) {
  const auto c = a.coefficients();
  if (sgn(c[0]) == 0) {
    throw std::domain_error("cannot invert " + name + ": constant term is zero");
  }
  const std::size_t order = a.truncation();
  std::vector<Rational> inv(order + 1);
  const Rational lead_inv = 1 / c[0];
  inv[0] = lead_inv;
  Rational acc;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (sgn(c[i]) != 0) acc += c[i] * inv[n - i];
    }
    inv[n] = -acc * lead_inv;
  }
  return QSeries(std::move(inv));
}

QSeries power(const QSeries& a, unsigned exponent) {
  QSeries result = QSeries::constant(1, a.truncation());
  QSeries base = a;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

QSeries substitute_power(const QSeries& a, std::size_t t) {
  if (t == 0) throw std::invalid_argument("substitute_power: t must be positive");
  const std::size_t order = a.truncation();
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n * t <= order; ++n) out[n * t] = a.coefficients()[n];
  return QSeries(std::move(out));
}

QSeries shift(const QSeries& a, std::size_t e) {
  const std::size_t order = a.truncation();
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n + e <= order; ++n) out[n + e] = a.coefficients()[n];
  return QSeries(std::move(out));
}

nlohmann::json to_json(const QSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_string(c));
  return {{"truncation", s.truncation()}, {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const nlohmann::json& j) {
  const auto truncation = j.at("truncation").get<std::size_t>();
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != truncation + 1) {
    throw std::invalid_argument("series JSON: expected " + std::to_string(truncation + 1) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  std::vector<Rational> values;
  values.reserve(coeffs.size());
  for (const auto& c : coeffs) values.push_back(parse_rational(c.get<std::string>()));
  return QSeries(std::move(values));
}

std::string to_display_string(const QSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t n = 0; n <= s.truncation(); ++n) {
    const Rational& c = s.at(n);
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (n == 0) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << "*";
      out << "q";
      if (n > 1) out << "^" << n;
    }
    first = false;
  }
  if (first) out << "0";
  out << " + O(q^" << s.truncation() + 1 << ")";
  return out.str();
}

}  // namespace eta42
