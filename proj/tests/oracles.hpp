#pragma once

// Slow, formula-free reference computations used only by the tests.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "eta42/qseries.hpp"

namespace eta42::oracle {

inline std::int64_t sigma_naive(unsigned k, std::int64_t n) {
  if (n <= 0) return 0;
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::int64_t p = 1;
    for (unsigned i = 0; i < k; ++i) p *= d;
    total += p;
  }
  return total;
}

// Index of Γ0(N) as the number of points of P^1(Z/NZ): pairs (c, d) mod N
// with gcd(c, d, N) = 1, divided by the unit count.
inline std::uint64_t projective_line_size(std::uint64_t n) {
  std::uint64_t pairs = 0, units = 0;
  for (std::uint64_t c = 0; c < n; ++c) {
    if (std::gcd(c, n) == 1) ++units;
    for (std::uint64_t d = 0; d < n; ++d) {
      if (std::gcd(std::gcd(c, d), n) == 1) ++pairs;
    }
  }
  return pairs / units;
}

// W_{r,s}(n) summing over both l and m independently.
inline std::int64_t convolution_naive(std::int64_t r, std::int64_t s, std::int64_t n) {
  std::int64_t total = 0;
  for (std::int64_t l = 0; l <= n; ++l) {
    for (std::int64_t m = 0; m <= n; ++m) {
      if (r * l + s * m == n) total += sigma_naive(1, l) * sigma_naive(1, m);
    }
  }
  return total;
}

// Partitions of n into parts of size at most `largest`.
inline std::uint64_t partitions(int n, int largest) {
  if (n == 0) return 1;
  std::uint64_t count = 0;
  for (int part = std::min(n, largest); part >= 1; --part) count += partitions(n - part, part);
  return count;
}

inline QSeries random_series(std::mt19937& rng, std::size_t order, int magnitude, bool unit_constant = false) {
  std::uniform_int_distribution<int> dist(-magnitude, magnitude);
  std::vector<Rational> c(order + 1);
  for (auto& v : c) v = dist(rng);
  if (unit_constant) c[0] = 1;
  return QSeries(std::move(c));
}

}  // namespace eta42::oracle
