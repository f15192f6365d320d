#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eta42/audit.hpp"
#include "eta42/identities.hpp"
#include "eta42/numtheory.hpp"
#include "oracles.hpp"

using namespace eta42;

namespace {

constexpr std::pair<std::uint64_t, std::uint64_t> kPairs[] = {{1, 42}, {2, 21}, {3, 14}, {6, 7}};

const Basis42& basis300() {
  static const Basis42 basis = build_basis(300);
  return basis;
}

}  // namespace

TEST_CASE("build_basis at T = 40") {
  const Basis42 basis = build_basis(40);
  CHECK(basis.truncation() == 40);
  CHECK(basis.ranks().full == 28);
  CHECK(basis.ranks().cusp == 20);
  CHECK(basis.ranks().eisenstein == 8);
  CHECK(basis.element(0).at(0) == 1);
  CHECK(Basis42::label(0) == "E4@1");
  CHECK(Basis42::label(7) == "E4@42");
  CHECK(Basis42::label(8) == "C@1");
  CHECK(Basis42::label(27) == "C@20");
  CHECK_THROWS_AS(Basis42::label(28), std::out_of_range);
  CHECK_THROWS_AS(build_basis(31), std::invalid_argument);
}

TEST_CASE("target_square constant terms") {
  CHECK(target_square(1, 42, 10).at(0) == 1681);
  CHECK(target_square(2, 21, 10).at(0) == 361);
  CHECK(target_square(3, 14, 10).at(0) == 121);
  CHECK(target_square(6, 7, 10).at(0) == 1);
  CHECK_THROWS_AS(target_square(1, 5, 10), std::invalid_argument);
  CHECK_THROWS_AS(target_square(42, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(target_square(1, 84, 10), std::invalid_argument);
}

TEST_CASE("solve_identity reproduces printed basis coefficients") {
  const IdentitySolution s1 = solve_identity(1, 42, basis300());
  CHECK(s1.x.at(1) == Rational(604, 625));
  CHECK(s1.y.at(1) == Rational(6912, 5));
  CHECK(s1.y.at(7) == Rational(5340384, 25));
  CHECK(s1.y.at(3) == 0);
  CHECK(s1.y.at(17) == 0);

  CHECK(solve_identity(3, 14, basis300()).y.at(17) == 15552);
  CHECK(solve_identity(6, 7, basis300()).x.at(7) == Rational(29596, 625));
}

TEST_CASE("every decomposition reconstructs its target through q^300") {
  for (const auto& [r, s] : kPairs) {
    const IdentitySolution sol = solve_identity(r, s, basis300());
    REQUIRE(reconstruct(sol, basis300()) == target_square(r, s, 300));
  }
}

TEST_CASE("a target outside the span is rejected") {
  // E2 alone is only quasi-modular, so it has no expansion in the basis.
  const Basis42& basis = basis300();
  const QSeries l = eisenstein(EisensteinKind::E2, 1, 32);
  const RationalMatrix a = basis.coefficient_matrix(0, 32);
  CHECK_THROWS_AS(solve(a, l.coefficients()), InconsistentSystem);
}

TEST_CASE("derived W formulas carry the printed leading terms") {
  const WFormula w1 = derive_w_formula(solve_identity(1, 42, basis300()));
  CHECK(w1.terms.sigma3.at(1) == Rational(1, 6000));
  CHECK(w1.terms.sigma1.at(1) == LinearCoefficient{Rational(1, 24), Rational(-1, 168)});
  CHECK(w1.terms.sigma1.at(42) == LinearCoefficient{Rational(1, 24), Rational(-1, 4)});

  const WFormula w2 = derive_w_formula(solve_identity(2, 21, basis300()));
  CHECK(w2.terms.sigma1.at(2) == LinearCoefficient{Rational(1, 24), Rational(-1, 84)});
  CHECK(w2.terms.sigma1.at(21) == LinearCoefficient{Rational(1, 24), Rational(-1, 8)});

  const WFormula w3 = derive_w_formula(solve_identity(3, 14, basis300()));
  CHECK(w3.terms.cusp.at({17, 1}) == Rational(-9, 28));
}

TEST_CASE("linear-term constants are 1/24 for every pair") {
  for (const auto& [r, s] : kPairs) {
    const WFormula w = derive_w_formula(solve_identity(r, s, basis300()));
    REQUIRE(w.terms.sigma1.size() == 2);
    for (const auto& [u, c] : w.terms.sigma1) REQUIRE(c.constant == Rational(1, 24));
  }
}

TEST_CASE("eval_w examples") {
  const auto& cusp = basis300().cusp_forms();
  const WFormula w1 = derive_w_formula(solve_identity(1, 42, basis300()));
  CHECK(eval_w(w1, 42, cusp) == 0);
  CHECK(eval_w(w1, 43, cusp) == 1);
  CHECK(eval_w(w1, 84, cusp) == 96);
  const WFormula w67 = derive_w_formula(solve_identity(6, 7, basis300()));
  CHECK(eval_w(w67, 13, cusp) == 1);
  CHECK_THROWS_AS(eval_w(w67, 301, cusp), std::out_of_range);
  CHECK_THROWS_AS(eval_w(w67, 0, cusp), std::invalid_argument);
}

TEST_CASE("brute_force_w examples") {
  CHECK(brute_force_w(1, 14, 15) == 1);
  CHECK(brute_force_w(1, 42, 84) == 96);
  CHECK(brute_force_w(2, 21, 1) == 0);
}

TEST_CASE("brute_force_w agrees with the two-variable oracle and is symmetric") {
  for (const auto& [r, s] : kPairs) {
    for (std::int64_t n = 1; n <= 120; ++n) {
      REQUIRE(brute_force_w(r, s, n) == Integer(std::to_string(oracle::convolution_naive(r, s, n))));
      REQUIRE(brute_force_w(r, s, n) == brute_force_w(s, r, n));
    }
  }
}

TEST_CASE("derived formulas equal brute force for n = 1..300") {
  const auto& cusp = basis300().cusp_forms();
  for (const auto& [r, s] : kPairs) {
    const WFormula w = derive_w_formula(solve_identity(r, s, basis300()));
    for (std::uint64_t n = 1; n <= 300; ++n) {
      CAPTURE(r);
      CAPTURE(n);
      REQUIRE(eval_w(w, n, cusp) == Rational(brute_force_w(r, s, n)));
    }
  }
}

TEST_CASE("W_{1,14}: printed and derived formulas both match brute force") {
  const auto& cusp = basis300().cusp_forms();
  const PrintedCoefficients printed = PrintedCoefficients::load(PrintedCoefficients::default_path());
  const WFormula printed_w{1, 14, printed.convolution_formula(1, 14)};
  const WFormula derived_w = derive_w_formula(solve_identity(1, 14, basis300()));
  CHECK(derived_w.terms == printed_w.terms);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    REQUIRE(eval_w(printed_w, n, cusp) == Rational(brute_force_w(1, 14, n)));
  }
  // 1/600 + 1/24 - 1/56 - 107/4200 = 0 with c4(1) = 1, c2(1) = c3(1) = 0.
  CHECK(Rational(1, 600) + Rational(1, 24) - Rational(1, 56) - Rational(107, 4200) == 0);
  CHECK(eval_w(printed_w, 1, cusp) == 0);
}

TEST_CASE("other sub-level pairs also reduce to brute force") {
  const auto& cusp = basis300().cusp_forms();
  for (const auto& [r, s] : {std::pair<std::uint64_t, std::uint64_t>{1, 7}, {2, 7}, {1, 6}, {1, 2}}) {
    const WFormula w = derive_w_formula(solve_identity(r, s, basis300()));
    for (std::uint64_t n = 1; n <= 150; ++n) REQUIRE(eval_w(w, n, cusp) == Rational(brute_force_w(r, s, n)));
  }
}

TEST_CASE("solution JSON uses basis labels") {
  const auto j = to_json(solve_identity(1, 42, basis300()));
  CHECK(j["coefficients"]["E4@1"] == "604/625");
  CHECK(j["coefficients"]["C@7"] == "5340384/25");
  CHECK(j["coefficients"]["C@17"] == "0");
}

TEST_CASE("divisor formula algebra") {
  DivisorFormula f;
  f.sigma3[1] = 2;
  f.sigma1[1] = {Rational(1, 24), Rational(-1, 4)};
  f.cusp[{4, 1}] = 3;
  const DivisorFormula g = f.at_fraction(3);
  CHECK(g.sigma3.at(3) == 2);
  CHECK(g.sigma1.at(3) == LinearCoefficient{Rational(1, 24), Rational(-1, 12)});
  CHECK(g.cusp.at({4, 3}) == 3);

  const CuspExpansions cusp(20);
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const Rational expected = n % 3 == 0 ? f.evaluate(n / 3, cusp) : Rational(0);
    REQUIRE(g.evaluate(n, cusp) == expected);
  }
  CHECK((f + Rational(-1) * f).sigma3.empty());
  CHECK(divisor_formula_from_json(to_json(g)) == g);
  CHECK(to_json(g).contains("c@4/3"));
  CHECK_THROWS_AS(divisor_formula_from_json(nlohmann::json{{"c@21", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(divisor_formula_from_json(nlohmann::json{{"bogus@1", "1"}}), std::invalid_argument);
}
