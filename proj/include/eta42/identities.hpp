#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "eta42/etaforms.hpp"
#include "eta42/formula.hpp"
#include "eta42/qseries.hpp"
#include "eta42/ratlinalg.hpp"

namespace eta42 {

inline constexpr std::uint64_t kLevel = 42;
inline constexpr std::array<std::uint64_t, 8> kEisensteinScales = {1, 2, 3, 6, 7, 14, 21, 42};
inline constexpr std::size_t kBasisSize = kEisensteinScales.size() + kCuspFormCount;

/// Ranks of the coefficient matrix on the q^0..q^S window, S the Sturm bound.
struct BasisRanks {
  std::size_t eisenstein = 0;
  std::size_t cusp = 0;
  std::size_t full = 0;
};

/// E4(q^t) for t | 42 ascending, then C_1..C_20. Element i of the basis is
/// labelled "E4@t" or "C@k".
class Basis42 {
 public:
  std::size_t truncation() const { return cusp_.truncation(); }
  const QSeries& element(std::size_t i) const;
  static std::string label(std::size_t i);
  const CuspExpansions& cusp_forms() const { return cusp_; }
  const BasisRanks& ranks() const { return ranks_; }

  /// Rows q^first..q^last, one column per basis element.
  RationalMatrix coefficient_matrix(std::size_t first, std::size_t last) const;

 private:
  friend Basis42 build_basis(std::size_t truncation);
  Basis42(std::vector<QSeries> eisenstein, CuspExpansions cusp);

  std::vector<QSeries> eisenstein_;
  CuspExpansions cusp_;
  BasisRanks ranks_;
};

/// Expands the 28 basis elements to order T (T >= Sturm bound) and checks the
/// window ranks. Throws std::runtime_error if the full rank is below 28.
Basis42 build_basis(std::size_t truncation);

/// (r L(q^r) - s L(q^s))^2 to order T. Requires r < s and rs | 42.
QSeries target_square(std::uint64_t r, std::uint64_t s, std::size_t truncation);

/// Coefficients of a target in the basis: x_t on E4(q^t), y_k on C_k.
struct IdentitySolution {
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::map<std::uint64_t, Rational> x;
  std::map<std::size_t, Rational> y;
};

/// Σ x_t E4(q^t) + Σ y_k C_k at the basis truncation.
QSeries reconstruct(const IdentitySolution& sol, const Basis42& basis);

/// Solves the equations for q^0..q^32 exactly, then checks the reconstruction
/// against the target on every coefficient up to the basis truncation.
/// Throws InconsistentSystem if the target is not in the span, and
/// std::runtime_error if the over-verification fails.
IdentitySolution solve_identity(std::uint64_t r, std::uint64_t s, const Basis42& basis);

nlohmann::json to_json(const IdentitySolution& sol);

/// Closed form of W_{r,s}(n) = Σ_{rl+sm=n} σ(l)σ(m).
struct WFormula {
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  DivisorFormula terms;
};

WFormula derive_w_formula(const IdentitySolution& sol);

/// Evaluates the formula at n >= 1; throws std::out_of_range when some c_k(n)
/// is beyond the expansion truncation.
Rational eval_w(const WFormula& f, std::uint64_t n, const CuspExpansions& cusp_forms);

/// Direct sum over l with rl <= n and s | (n - rl).
Integer brute_force_w(std::uint64_t r, std::uint64_t s, std::uint64_t n);

/// Throws std::invalid_argument unless r < s and rs | 42.
void require_supported_pair(std::uint64_t r, std::uint64_t s);

}  // namespace eta42
