#include "eta42/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace eta42 {

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational parse_rational(std::string_view text) {
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }

  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Integer numerator(num_str, 10);
  Integer denominator(std::string(den), 10);
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  Rational result(numerator, denominator);
  result.canonicalize();
  return result;
}

Rational fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

}  // namespace eta42
