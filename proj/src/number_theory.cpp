#include "verlinde/number_theory.hpp"

#include <numeric>
#include <stdexcept>

namespace verlinde {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; n > 1 && d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int p_adic_valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("p_adic_valuation: n must be positive");
  if (p < 2) throw std::invalid_argument("p_adic_valuation: p must be >= 2");
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::optional<PrimePowerSplit> as_prime_power(std::uint64_t n) {
  auto primes = prime_divisors(n);
  if (primes.size() != 1) return std::nullopt;
  return PrimePowerSplit{primes.front(), p_adic_valuation(n, primes.front())};
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count exceeds 64 bits");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("product exceeds 64 bits");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, int exponent) {
  std::uint64_t r = 1;
  for (int k = 0; k < exponent; ++k) r = checked_mul(r, base);
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    // r * (n - k + j) / j is exact at every step
    r = r * (n - k + j) / j;
    if (r > UINT64_MAX) throw std::overflow_error("binomial exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return checked_mul(a / std::gcd(a, b), b); }

}  // namespace verlinde
