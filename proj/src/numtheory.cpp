#include "eta42/numtheory.hpp"

#include <stdexcept>

namespace eta42 {

Integer sigma(unsigned k, std::uint64_t n, std::uint64_t t) {
  if (k == 0 || t == 0) throw std::invalid_argument("sigma: k and t must be positive");
  if (n == 0 || n % t != 0) return 0;
  const std::uint64_t m = n / t;
  Integer total = 0;
  Integer term;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), d, k);
    total += term;
    const std::uint64_t e = m / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), e, k);
      total += term;
    }
  }
  return total;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t gamma0_index(std::uint64_t level) {
  if (level == 0) throw std::invalid_argument("gamma0_index: level must be positive");
  // N Π (1 + 1/p) = Π p^(e-1) (p + 1), which stays integral at every step.
  std::uint64_t index = level;
  for (std::uint64_t p : prime_divisors(level)) index = index / p * (p + 1);
  return index;
}

std::uint64_t sturm_bound(std::uint64_t level) { return gamma0_index(level) / 3; }

}  // namespace eta42
