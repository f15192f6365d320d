#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eta42 {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den reduced to lowest terms. Throws std::invalid_argument when den == 0.
Rational fraction(const Integer& num, const Integer& den);

/// True when the rational has denominator 1.
inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace eta42
