#pragma once

#include <cstdint>
#include <vector>

#include "eta42/rational.hpp"

namespace eta42 {

/// Divisor power sum σ_k(n/t).
///
/// Total on n >= 0: the value is Σ_{d | n/t} d^k when t divides n and n > 0,
/// and 0 when t does not divide n or n = 0. σ(n) means sigma(1, n, 1).
Integer sigma(unsigned k, std::uint64_t n, std::uint64_t t = 1);

/// Distinct prime divisors of n in ascending order (empty for n = 1).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Index of Γ0(N) in SL2(Z): N Π_{p | N} (1 + 1/p).
std::uint64_t gamma0_index(std::uint64_t level);

/// Weight-4 Sturm bound floor(index / 3). Two forms in M4(Γ0(N)) that agree on
/// q^0 .. q^bound are equal.
std::uint64_t sturm_bound(std::uint64_t level);

}  // namespace eta42
