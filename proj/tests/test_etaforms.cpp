#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eta42/etaforms.hpp"
#include "eta42/numtheory.hpp"

using namespace eta42;

namespace {

// Pentagonal number theorem: coefficient of q^{m(3m±1)/2} is (-1)^m.
Rational pentagonal_coefficient(long n) {
  for (long m = 0; m * (3 * m - 1) / 2 <= n; ++m) {
    if (m * (3 * m - 1) / 2 == n || m * (3 * m + 1) / 2 == n) return m % 2 == 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

TEST_CASE("euler_series examples") {
  const QSeries e = euler_series(7);
  const long expected[] = {1, -1, -1, 0, 0, 1, 0, 1};
  for (int n = 0; n <= 7; ++n) CHECK(e.at(n) == expected[n]);
  CHECK(e.at(0) == 1);
  CHECK(e.at(3) == 0);
}

TEST_CASE("euler_series equals the pentagonal expansion through q^100") {
  const QSeries e = euler_series(100);
  for (long n = 0; n <= 100; ++n) REQUIRE(e.at(n) == pentagonal_coefficient(n));
}

TEST_CASE("eta_quotient_series examples") {
  const auto& family = cusp_form_family();
  const QSeries c1 = eta_quotient_series(family[0], 10);
  CHECK(c1.at(0) == 0);
  CHECK(c1.at(1) == 1);

  const QSeries c2 = eta_quotient_series(family[1], 10);
  CHECK(c2.at(1) == 0);
  CHECK(c2.at(2) == 1);

  // Δ = η^24: τ(1..4) = 1, -24, 252, -1472.
  const QSeries delta = eta_quotient_series(EtaQuotientSpec(1, {{1, 24}}), 4);
  CHECK(delta.at(0) == 0);
  CHECK(delta.at(1) == 1);
  CHECK(delta.at(2) == -24);
  CHECK(delta.at(3) == 252);
  CHECK(delta.at(4) == -1472);
}

TEST_CASE("eta_quotient_series rejects a fractional prefactor and names the spec") {
  try {
    eta_quotient_series(EtaQuotientSpec(1, {{1, 2}}), 5);
    FAIL("expected an exception");
  } catch (const std::domain_error& e) {
    const std::string what = e.what();
    CHECK(what.find("1: 1^2") != std::string::npos);
    CHECK(what.find("2/24") != std::string::npos);
  }
  CHECK_THROWS_AS(eta_quotient_series(EtaQuotientSpec(2, {{1, 24}, {2, -24}}), 5), std::domain_error);
}

TEST_CASE("leading term of each cusp form sits at Σδr/24 with coefficient 1") {
  const CuspExpansions cusp(30);
  for (std::size_t k = 1; k <= kCuspFormCount; ++k) {
    const auto lead = static_cast<std::size_t>(cusp_form_family()[k - 1].weighted_sum() / 24);
    CAPTURE(k);
    for (std::size_t n = 0; n < lead; ++n) REQUIRE(cusp.coefficient(k, n) == 0);
    REQUIRE(cusp.coefficient(k, lead) == 1);
  }
}

TEST_CASE("negating all exponents inverts a weight-zero quotient") {
  const EtaQuotientSpec a(2, {{1, 2}, {2, -1}});
  const EtaQuotientSpec b(2, {{1, -2}, {2, 1}});
  CHECK(eta_quotient_series(b, 30) == invert(eta_quotient_series(a, 30)));
  const EtaQuotientSpec c(42, {{1, 6}, {2, -3}, {3, -4}, {6, 2}});
  const EtaQuotientSpec d(42, {{1, -6}, {2, 3}, {3, 4}, {6, -2}});
  REQUIRE(c.weighted_sum() == 0);
  CHECK(eta_quotient_series(d, 30) == invert(eta_quotient_series(c, 30)));
}

TEST_CASE("check_ligozat examples") {
  const auto& family = cusp_form_family();
  const LigozatReport c1 = check_ligozat(family[0]);
  CHECK(c1.verdict == Verdict::CuspForm);
  CHECK(c1.weight == 4);

  const LigozatReport bad = check_ligozat(EtaQuotientSpec(1, {{1, 2}}));
  CHECK_FALSE(bad.condition_i);
  CHECK(bad.verdict == Verdict::NotModular);

  const LigozatReport c5 = check_ligozat(parse_eta_spec("42: 1^2 2^2 3^2 6^2"));
  CHECK(c5.verdict == Verdict::CuspForm);
  CHECK(c5.weight == 4);
  CHECK(parse_eta_spec("42: 1^2 2^2 3^2 6^2").weighted_sum() == 24);
}

TEST_CASE("all twenty cusp forms pass the Ligozat criteria at weight 4") {
  for (std::size_t k = 1; k <= kCuspFormCount; ++k) {
    const LigozatReport r = check_ligozat(cusp_form_family()[k - 1]);
    CAPTURE(k);
    CHECK(r.condition_i);
    CHECK(r.condition_ii);
    CHECK(r.condition_iii);
    CHECK(r.condition_iv_strict);
    CHECK(r.condition_v);
    CHECK(r.weight == 4);
    CHECK(r.verdict == Verdict::CuspForm);
  }
  CHECK(cusp_form_family()[17].weighted_sum() == 120);
}

TEST_CASE("Ligozat verdict distinguishes modular from cusp forms") {
  // Δ(z) vanishes at the only cusp of SL2(Z).
  CHECK(check_ligozat(EtaQuotientSpec(1, {{1, 24}})).verdict == Verdict::CuspForm);
  // η^16(z)/η^8(2z) ... order at cusp 2 is zero: a modular but not cusp form.
  const LigozatReport r = check_ligozat(EtaQuotientSpec(2, {{1, 16}, {2, -8}}));
  CHECK(r.condition_iv);
  CHECK_FALSE(r.condition_iv_strict);
  CHECK(r.verdict == Verdict::ModularForm);
  CHECK(r.weight == 4);
  // Odd weight fails (v).
  CHECK_FALSE(check_ligozat(EtaQuotientSpec(4, {{1, 4}, {2, -2}, {4, 4}})).condition_v);
  // Non-square product fails (iii): 2^1.
  CHECK_FALSE(check_ligozat(EtaQuotientSpec(2, {{1, 23}, {2, 1}})).condition_iii);
}

TEST_CASE("eisenstein examples") {
  CHECK(eisenstein(EisensteinKind::E2, 1, 5).at(1) == -24);
  CHECK(eisenstein(EisensteinKind::E4, 1, 5).at(2) == 2160);
  const QSeries l42 = eisenstein(EisensteinKind::E2, 42, 84);
  for (int n = 1; n <= 41; ++n) CHECK(l42.at(n) == 0);
  CHECK(l42.at(42) == -24);
  CHECK(l42.at(84) == -72);
}

TEST_CASE("Glaisher: L^2 = 1 + Σ (240σ3(n) - 288nσ(n)) q^n through n = 200") {
  const QSeries l = eisenstein(EisensteinKind::E2, 1, 200);
  const QSeries sq = l * l;
  CHECK(sq.at(0) == 1);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    REQUIRE(sq.at(n) == Rational(240 * sigma(3, n) - 288 * Integer(n) * sigma(1, n)));
  }
}

TEST_CASE("spec parsing") {
  const EtaQuotientSpec s = parse_eta_spec("42: 1^5 2^-1 7^5 14^-1");
  CHECK(s == cusp_form_family()[0]);
  CHECK(to_string(s) == "42: 1^5 2^-1 7^5 14^-1");
  CHECK(parse_eta_spec("6: 1 6^+2").exponents().at(1) == 1);
  CHECK_THROWS_AS(parse_eta_spec("42: 5^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta_spec("1^2 2^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta_spec("42: 1^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta_spec("42: 1^2 1^3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta_spec("42: 1^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta_spec("0: 1^2"), std::invalid_argument);
}

TEST_CASE("cusp coefficient lookups at fractional arguments") {
  const CuspExpansions cusp(12);
  CHECK(cusp.coefficient_at_fraction(2, 7, 3) == 0);
  CHECK(cusp.coefficient_at_fraction(2, 6, 3) == cusp.coefficient(2, 2));
  CHECK_THROWS_AS(cusp.coefficient(21, 1), std::out_of_range);
  CHECK_THROWS_AS(cusp.coefficient(1, 13), std::out_of_range);
  CHECK_THROWS_AS(cusp.coefficient_at_fraction(1, 39, 3), std::out_of_range);
}
