#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eta42/etaforms.hpp"
#include "eta42/ratlinalg.hpp"

using namespace eta42;

namespace {

RationalMatrix matrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values) {
  std::vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return RationalMatrix(rows, cols, std::move(v));
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int magnitude) {
  std::uniform_int_distribution<int> dist(-magnitude, magnitude);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = fraction(dist(rng), 1 + (dist(rng) + magnitude) % 3);
  }
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(matrix(2, 2, {1, 0, 0, 1})) == 2);
  CHECK(rank(matrix(3, 3, {1, 2, 3, 4, 5, 6, 1, 2, 3})) == 2);
  CHECK(rank(RationalMatrix(3, 4)) == 0);
}

TEST_CASE("cusp coefficient matrix on q^0..q^32 has rank 20") {
  const CuspExpansions cusp(32);
  RationalMatrix m(kCuspFormCount, 33);
  for (std::size_t k = 1; k <= kCuspFormCount; ++k) {
    for (std::size_t n = 0; n <= 32; ++n) m(k - 1, n) = cusp.coefficient(k, n);
  }
  CHECK(rank(m) == 20);
}

TEST_CASE("a repeated row drops the rank below the row count") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix m = random_matrix(rng, 5, 7, 6);
    for (std::size_t j = 0; j < 7; ++j) m(4, j) = m(1, j);
    REQUIRE(rank(m) < 5);
  }
}

TEST_CASE("rank is invariant under transposition") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + trial % 6;
    const std::size_t cols = 1 + (trial * 7) % 5;
    const RationalMatrix m = random_matrix(rng, rows, cols, 2);
    REQUIRE(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("solve examples") {
  const std::vector<Rational> b{Rational(3), Rational(-1, 2)};
  CHECK(solve(matrix(2, 2, {1, 0, 0, 1}), b) == b);

  const std::vector<Rational> rhs{Rational(3), Rational(6)};
  CHECK(solve(matrix(2, 1, {1, 2}), rhs) == std::vector<Rational>{Rational(3)});
}

TEST_CASE("solve reports the first inconsistent equation") {
  const RationalMatrix a = matrix(4, 2, {1, 0, 0, 1, 1, 1, 2, 2});
  const std::vector<Rational> b{1, 1, 2, 5};
  try {
    solve(a, b);
    FAIL("expected InconsistentSystem");
  } catch (const InconsistentSystem& e) {
    CHECK(e.row() == 3);
  }
  const std::vector<Rational> c{1, 1, 3, 4};
  try {
    solve(a, c);
    FAIL("expected InconsistentSystem");
  } catch (const InconsistentSystem& e) {
    CHECK(e.row() == 2);
  }
}

TEST_CASE("solve rejects a consistent but rank-deficient system") {
  const RationalMatrix a = matrix(2, 2, {1, 2, 2, 4});
  const std::vector<Rational> b{1, 2};
  try {
    solve(a, b);
    FAIL("expected RankDeficientSystem");
  } catch (const RankDeficientSystem& e) {
    CHECK(e.rank() == 1);
  }
  CHECK_THROWS_AS(solve(a, std::vector<Rational>{1}), std::invalid_argument);
}

TEST_CASE("random full-rank overdetermined systems recover the planted solution") {
  std::mt19937 rng(1234);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix a = random_matrix(rng, 9, 6, 5);
    if (rank(a) != 6) continue;
    std::vector<Rational> x(6);
    for (auto& v : x) v = fraction(static_cast<long>(rng() % 200) - 100, static_cast<long>(1 + rng() % 17));
    const auto b = a.apply(x);
    REQUIRE(solve(a, b) == x);
    REQUIRE(a.apply(solve(a, b)) == b);
    ++solved;
  }
  CHECK(solved > 20);
}

TEST_CASE("matrix construction checks the entry count") {
  CHECK_THROWS_AS(RationalMatrix(2, 2, std::vector<Rational>(3)), std::invalid_argument);
}
