#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "eta42/etaforms.hpp"
#include "eta42/formula.hpp"
#include "eta42/identities.hpp"

namespace eta42 {

/// #{(x, y) in Z^2 : x^2 + xy + y^2 = n}.
std::uint64_t hex_count(std::uint64_t n);

/// r(a) for the quaternary form (x1^2 + x1x2 + x2^2) + (x3^2 + x3x4 + x4^2),
/// as the convolution Σ_i hex_count(i) hex_count(a - i).
std::uint64_t r4_enumerate(std::uint64_t a);

/// r(a) by direct search over Z^4. Only practical for small a.
std::uint64_t r4_direct(std::uint64_t a);

/// 12σ(a) - 36σ(a/3), a >= 1.
Integer r4_formula(std::uint64_t a);

/// N_l(n) = Σ_{a + lb = n} r(a) r(b), with r from r4_enumerate.
Integer n_l_enumerate(std::uint64_t l, std::uint64_t n);

/// The integer cusp aggregate u(n) of the compact N14 formula.
Integer u_value(std::uint64_t n, const CuspExpansions& cusp_forms);

/// Closed form S14(n) = Σ_t A_t σ3(n/t) + (6/875) u(n). Throws
/// std::runtime_error when the value is not a nonnegative integer.
Integer n14_formula(std::uint64_t n, const CuspExpansions& cusp_forms);

/// The same closed form as a DivisorFormula (u(n) expanded).
DivisorFormula n14_compact_formula();

/// 12σ(n) - 36σ(n/3) + 12σ(n/14) - 36σ(n/42) + 144 W_{1,14}(n)
///   - 432 W_{3,14}(n) - 432 W_{1,42}(n) + 1296 W_{1,14}(n/3), from brute-force W.
Integer build_n14_from_w(std::uint64_t n);

/// Combines closed forms of W_{1,14}, W_{3,14}, W_{1,42} into a formula for
/// N14(n). Linear σ terms must cancel; any that survive are kept.
DivisorFormula derive_n14_formula(const WFormula& w1_14, const WFormula& w3_14, const WFormula& w1_42);

struct RepTableRow {
  std::uint64_t n = 0;
  Integer count;   // lattice enumeration
  Integer sigma3;
  Integer u;
  Integer formula;  // S14(n)
};

/// Rows n = 1..max_n.
std::vector<RepTableRow> rep_table(std::uint64_t max_n, const CuspExpansions& cusp_forms);

/// Columns: n,N14(n),sigma3(n),u(n),S14(n)
std::string to_csv(const std::vector<RepTableRow>& rows);
nlohmann::json to_json(const std::vector<RepTableRow>& rows);

}  // namespace eta42
