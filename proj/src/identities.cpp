#include "eta42/identities.hpp"

#include <stdexcept>
#include <string>

#include "eta42/numtheory.hpp"

namespace eta42 {

Basis42::Basis42(std::vector<QSeries> eisenstein, CuspExpansions cusp)
    : eisenstein_(std::move(eisenstein)), cusp_(std::move(cusp)) {}

const QSeries& Basis42::element(std::size_t i) const {
  if (i < eisenstein_.size()) return eisenstein_[i];
  return cusp_.series(i - eisenstein_.size() + 1);
}

std::string Basis42::label(std::size_t i) {
  if (i < kEisensteinScales.size()) return "E4@" + std::to_string(kEisensteinScales[i]);
  if (i < kBasisSize) return "C@" + std::to_string(i - kEisensteinScales.size() + 1);
  throw std::out_of_range("basis index " + std::to_string(i) + " out of range");
}

RationalMatrix Basis42::coefficient_matrix(std::size_t first, std::size_t last) const {
  RationalMatrix m(last - first + 1, kBasisSize);
  for (std::size_t j = 0; j < kBasisSize; ++j) {
    const QSeries& e = element(j);
    for (std::size_t n = first; n <= last; ++n) m(n - first, j) = e.at(n);
  }
  return m;
}

namespace {

RationalMatrix column_block(const RationalMatrix& m, std::size_t first, std::size_t count) {
  RationalMatrix out(m.rows(), count);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < count; ++j) out(i, j) = m(i, first + j);
  }
  return out;
}

}  // namespace

Basis42 build_basis(std::size_t truncation) {
  const std::size_t window = sturm_bound(kLevel);
  if (truncation < window) {
    throw std::invalid_argument("basis truncation " + std::to_string(truncation) + " is below the Sturm bound " +
                                std::to_string(window));
  }
  std::vector<QSeries> eisenstein_part;
  for (std::uint64_t t : kEisensteinScales) eisenstein_part.push_back(eisenstein(EisensteinKind::E4, t, truncation));

  Basis42 basis(std::move(eisenstein_part), CuspExpansions(truncation));
  const RationalMatrix m = basis.coefficient_matrix(0, window);
  basis.ranks_.full = rank(m);
  basis.ranks_.eisenstein = rank(column_block(m, 0, kEisensteinScales.size()));
  basis.ranks_.cusp = rank(column_block(m, kEisensteinScales.size(), kCuspFormCount));
  if (basis.ranks_.full != kBasisSize) {
    throw std::runtime_error("basis coefficient matrix has rank " + std::to_string(basis.ranks_.full) +
                             ", expected " + std::to_string(kBasisSize));
  }
  return basis;
}

void require_supported_pair(std::uint64_t r, std::uint64_t s) {
  if (r == 0 || s == 0 || r >= s || kLevel % (r * s) != 0) {
    throw std::invalid_argument("unsupported pair (" + std::to_string(r) + "," + std::to_string(s) +
                                "): need r < s and rs dividing 42");
  }
}

QSeries target_square(std::uint64_t r, std::uint64_t s, std::size_t truncation) {
  require_supported_pair(r, s);
  const QSeries diff = Rational(r) * eisenstein(EisensteinKind::E2, r, truncation) -
                       Rational(s) * eisenstein(EisensteinKind::E2, s, truncation);
  return diff * diff;
}

QSeries reconstruct(const IdentitySolution& sol, const Basis42& basis) {
  QSeries total(basis.truncation());
  for (std::size_t i = 0; i < kEisensteinScales.size(); ++i) {
    auto it = sol.x.find(kEisensteinScales[i]);
    if (it != sol.x.end() && sgn(it->second) != 0) total = total + it->second * basis.element(i);
  }
  for (std::size_t k = 1; k <= kCuspFormCount; ++k) {
    auto it = sol.y.find(k);
    if (it != sol.y.end() && sgn(it->second) != 0) total = total + it->second * basis.cusp_forms().series(k);
  }
  return total;
}

IdentitySolution solve_identity(std::uint64_t r, std::uint64_t s, const Basis42& basis) {
  const std::size_t window = sturm_bound(kLevel);
  const QSeries target = target_square(r, s, basis.truncation());
  const RationalMatrix a = basis.coefficient_matrix(0, window);
  std::vector<Rational> b(target.coefficients().begin(), target.coefficients().begin() + window + 1);
  const std::vector<Rational> coeffs = solve(a, b);

  IdentitySolution sol{r, s, {}, {}};
  for (std::size_t i = 0; i < kEisensteinScales.size(); ++i) sol.x[kEisensteinScales[i]] = coeffs[i];
  for (std::size_t k = 1; k <= kCuspFormCount; ++k) sol.y[k] = coeffs[kEisensteinScales.size() + k - 1];

  const QSeries rebuilt = reconstruct(sol, basis);
  for (std::size_t n = 0; n <= basis.truncation(); ++n) {
    if (rebuilt.at(n) != target.at(n)) {
      throw std::runtime_error("identity (" + std::to_string(r) + "," + std::to_string(s) +
                               ") fails beyond the Sturm window at q^" + std::to_string(n));
    }
  }
  return sol;
}

nlohmann::json to_json(const IdentitySolution& sol) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [t, v] : sol.x) coeffs["E4@" + std::to_string(t)] = to_string(v);
  for (const auto& [k, v] : sol.y) coeffs["C@" + std::to_string(k)] = to_string(v);
  return {{"r", sol.r}, {"s", sol.s}, {"coefficients", std::move(coeffs)}};
}

WFormula derive_w_formula(const IdentitySolution& sol) {
  const std::uint64_t r = sol.r;
  const std::uint64_t s = sol.s;
  require_supported_pair(r, s);

  // Coefficient of q^n (n >= 1) on each side of
  //   r^2 L^2(q^r) - 2rs L(q^r)L(q^s) + s^2 L^2(q^s) = Σ x_t E4(q^t) + Σ y_k C_k,
  // with L^2(q^u) -> 240 σ3(n/u) - 288 (n/u) σ(n/u) and
  //   L(q^r)L(q^s) -> -24 σ(n/r) - 24 σ(n/s) + 576 W_{r,s}(n).
  // Collect everything except the W term on one side as a formula.
  DivisorFormula lhs;
  auto add_square = [&lhs](std::uint64_t u, std::uint64_t scale) {
    const Rational sq = Rational(scale) * scale;
    lhs.sigma3[u] += 240 * sq;
    lhs.sigma1[u].slope += -288 * sq / Rational(u);
  };
  add_square(r, r);
  add_square(s, s);
  const Rational cross = -2 * Rational(r) * s;  // multiplier of L(q^r)L(q^s)
  lhs.sigma1[r].constant += cross * -24;
  lhs.sigma1[s].constant += cross * -24;

  DivisorFormula rhs;
  for (const auto& [t, v] : sol.x) rhs.sigma3[t] += 240 * v;
  for (const auto& [k, v] : sol.y) rhs.cusp[{k, 1}] += v;

  // lhs + cross·576·W = rhs  =>  W = (rhs - lhs) / (576·cross)
  DivisorFormula difference = rhs + Rational(-1) * lhs;
  WFormula f{r, s, Rational(1) / (576 * cross) * difference};
  f.terms.prune();
  return f;
}

Rational eval_w(const WFormula& f, std::uint64_t n, const CuspExpansions& cusp_forms) {
  if (n == 0) throw std::invalid_argument("eval_w: n must be positive");
  return f.terms.evaluate(n, cusp_forms);
}

Integer brute_force_w(std::uint64_t r, std::uint64_t s, std::uint64_t n) {
  if (r == 0 || s == 0) throw std::invalid_argument("brute_force_w: r and s must be positive");
  Integer total = 0;
  for (std::uint64_t l = 0; r * l <= n; ++l) {
    const std::uint64_t rest = n - r * l;
    if (rest % s != 0) continue;
    total += sigma(1, l) * sigma(1, rest / s);
  }
  return total;
}

}  // namespace eta42
