#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace verlinde {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order; empty for n <= 1.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest k with p^k | n. Requires n >= 1 and p >= 2.
int p_adic_valuation(std::uint64_t n, std::uint64_t p);

struct PrimePowerSplit {
  std::uint64_t prime;
  int exponent;
};

/// (p, k) when n = p^k with k >= 1, nullopt otherwise.
std::optional<PrimePowerSplit> as_prime_power(std::uint64_t n);

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, int exponent);

/// Exact binomial coefficient; 0 when k > n. Throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace verlinde
