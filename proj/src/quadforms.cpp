#include "eta42/quadforms.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "eta42/numtheory.hpp"

namespace eta42 {

std::uint64_t hex_count(std::uint64_t n) {
  // x^2 + xy + y^2 = (x + y/2)^2 + 3y^2/4 gives |y| <= 2 sqrt(n/3); same for x by symmetry.
  const auto bound = static_cast<std::int64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(n) / 3.0))) + 1;
  const auto target = static_cast<std::int64_t>(n);
  std::uint64_t count = 0;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      if (x * x + x * y + y * y == target) ++count;
    }
  }
  return count;
}

std::uint64_t r4_enumerate(std::uint64_t a) {
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i <= a; ++i) total += hex_count(i) * hex_count(a - i);
  return total;
}

std::uint64_t r4_direct(std::uint64_t a) {
  const auto bound = static_cast<std::int64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(a) / 3.0))) + 1;
  const auto target = static_cast<std::int64_t>(a);
  std::uint64_t count = 0;
  for (std::int64_t x1 = -bound; x1 <= bound; ++x1) {
    for (std::int64_t x2 = -bound; x2 <= bound; ++x2) {
      const std::int64_t first = x1 * x1 + x1 * x2 + x2 * x2;
      if (first > target) continue;
      for (std::int64_t x3 = -bound; x3 <= bound; ++x3) {
        for (std::int64_t x4 = -bound; x4 <= bound; ++x4) {
          if (first + x3 * x3 + x3 * x4 + x4 * x4 == target) ++count;
        }
      }
    }
  }
  return count;
}

Integer r4_formula(std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("r4_formula: a must be positive");
  return 12 * sigma(1, a) - 36 * sigma(1, a, 3);
}

Integer n_l_enumerate(std::uint64_t l, std::uint64_t n) {
  if (l == 0) throw std::invalid_argument("n_l_enumerate: l must be positive");
  Integer total = 0;
  for (std::uint64_t b = 0; l * b <= n; ++b) {
    total += Integer(r4_enumerate(n - l * b)) * Integer(r4_enumerate(b));
  }
  return total;
}

namespace {

struct UTerm {
  std::size_t k;
  std::uint64_t divisor;
  long coefficient;
};

// u(n); the c12 term is printed without an argument and read as c12(n).
constexpr UTerm kUTerms[] = {
    {2, 1, 1680},  {2, 3, 2160},  {3, 1, -35},      {3, 3, -315},  {4, 1, 1715},
    {4, 3, -4815}, {5, 1, 21},    {6, 1, -18900},   {7, 1, 14490}, {8, 1, 1029},
    {10, 1, -7560}, {12, 1, -1470}, {17, 1, 20250}, {19, 1, 12960},
};

struct Sigma3Term {
  std::uint64_t t;
  long numerator;
};

constexpr Sigma3Term kN14Sigma3[] = {{1, 12},    {2, 48},     {3, 108},   {6, 432},
                                     {7, 588},   {14, 2352},  {21, 5292}, {42, 21168}};
constexpr long kN14Sigma3Denominator = 125;

const Rational kUScale(6, 875);

}  // namespace

Integer u_value(std::uint64_t n, const CuspExpansions& cusp_forms) {
  Rational total = 0;
  for (const auto& term : kUTerms) {
    total += Rational(term.coefficient) * cusp_forms.coefficient_at_fraction(term.k, n, term.divisor);
  }
  if (!is_integer(total)) throw std::runtime_error("u(" + std::to_string(n) + ") is not an integer");
  return total.get_num();
}

DivisorFormula n14_compact_formula() {
  DivisorFormula f;
  for (const auto& term : kN14Sigma3) f.sigma3[term.t] = fraction(term.numerator, kN14Sigma3Denominator);
  for (const auto& term : kUTerms) f.cusp[{term.k, term.divisor}] = kUScale * term.coefficient;
  f.prune();
  return f;
}

Integer n14_formula(std::uint64_t n, const CuspExpansions& cusp_forms) {
  Rational total = kUScale * Rational(u_value(n, cusp_forms));
  for (const auto& term : kN14Sigma3) {
    total += fraction(term.numerator, kN14Sigma3Denominator) * Rational(sigma(3, n, term.t));
  }
  if (!is_integer(total) || sgn(total) < 0) {
    throw std::runtime_error("N14 formula at n=" + std::to_string(n) + " gave " + to_string(total) +
                             ", not a nonnegative integer");
  }
  return total.get_num();
}

Integer build_n14_from_w(std::uint64_t n) {
  Integer total = 12 * sigma(1, n) - 36 * sigma(1, n, 3) + 12 * sigma(1, n, 14) - 36 * sigma(1, n, 42);
  total += 144 * brute_force_w(1, 14, n) - 432 * brute_force_w(3, 14, n) - 432 * brute_force_w(1, 42, n);
  if (n % 3 == 0) total += 1296 * brute_force_w(1, 14, n / 3);
  return total;
}

DivisorFormula derive_n14_formula(const WFormula& w1_14, const WFormula& w3_14, const WFormula& w1_42) {
  DivisorFormula f;
  f.sigma1[1].constant = 12;
  f.sigma1[3].constant = -36;
  f.sigma1[14].constant = 12;
  f.sigma1[42].constant = -36;
  f += Rational(144) * w1_14.terms;
  f += Rational(-432) * w3_14.terms;
  f += Rational(-432) * w1_42.terms;
  f += Rational(1296) * w1_14.terms.at_fraction(3);
  f.prune();
  return f;
}

std::vector<RepTableRow> rep_table(std::uint64_t max_n, const CuspExpansions& cusp_forms) {
  std::vector<RepTableRow> rows;
  rows.reserve(max_n);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    rows.push_back({n, n_l_enumerate(14, n), sigma(3, n), u_value(n, cusp_forms), n14_formula(n, cusp_forms)});
  }
  return rows;
}

std::string to_csv(const std::vector<RepTableRow>& rows) {
  std::ostringstream out;
  out << "n,N14(n),sigma3(n),u(n),S14(n)\n";
  for (const auto& row : rows) {
    out << row.n << "," << row.count << "," << row.sigma3 << "," << row.u << "," << row.formula << "\n";
  }
  return out.str();
}

nlohmann::json to_json(const std::vector<RepTableRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : rows) {
    j.push_back({{"n", row.n},
                 {"N14", row.count.get_si()},
                 {"sigma3", row.sigma3.get_si()},
                 {"u", row.u.get_si()},
                 {"S14", row.formula.get_si()}});
  }
  return j;
}

}  // namespace eta42
