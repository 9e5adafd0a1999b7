#pragma once

// Brute-force reference computations used only by the tests. They go through the
// exact Rational inner product and plain loops, never through the enumerator,
// the scaled integer Gram matrix or the per-type counters.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "verlinde/rational.hpp"
#include "verlinde/root_system.hpp"

namespace verlinde::testing {

inline std::vector<LieType> all_types_up_to_rank(int max_rank) {
  std::vector<LieType> out;
  for (char s : std::string("ABCDEFG"))
    for (int r = 1; r <= max_rank; ++r)
      if (is_admissible({static_cast<Series>(s), r})) out.push_back({static_cast<Series>(s), r});
  return out;
}

inline bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// p when n = p^k (k >= 1), 0 otherwise.
inline std::uint64_t naive_prime_power_base(std::uint64_t n) {
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
  }
  return 0;
}

/// <theta, omega_i> through the Rational inner product.
inline std::vector<std::int64_t> rational_marks(const RootSystem& rs) {
  std::vector<std::int64_t> marks;
  for (int i = 0; i < rs.rank(); ++i) {
    const Rational v = inner_product(rs, rs.highest_root, fundamental_weight(rs, i));
    marks.push_back(static_cast<std::int64_t>(v.numerator()));
  }
  return marks;
}

/// Visits every vector in the box [lo, hi]^rank.
inline void for_each_in_box(int rank, std::int64_t lo, std::int64_t hi,
                            const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(rank), lo);
  if (hi < lo) return;
  while (true) {
    visit(c);
    int k = 0;
    while (k < rank && c[static_cast<std::size_t>(k)] == hi) c[static_cast<std::size_t>(k++)] = lo;
    if (k == rank) return;
    ++c[static_cast<std::size_t>(k)];
  }
}

/// Regular weights by scanning the whole box [1, m-1]^rank and testing <theta, a> < m exactly.
inline std::vector<Weight> box_regular_weights(const RootSystem& rs, std::int64_t m) {
  std::vector<Weight> out;
  for_each_in_box(rs.rank(), 1, m - 1, [&](const std::vector<std::int64_t>& c) {
    const Weight a(c);
    if (inner_product(rs, rs.highest_root, a) < Rational(m)) out.push_back(a);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// #{lambda >= 0 : <theta, lambda> <= bound}, by box scan with the Rational marks.
inline std::uint64_t dominant_count(const RootSystem& rs, std::int64_t bound) {
  if (bound < 0) return 0;
  const auto marks = rational_marks(rs);
  std::uint64_t total = 0;
  for_each_in_box(rs.rank(), 0, bound, [&](const std::vector<std::int64_t>& c) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += marks[i] * c[i];
    if (s <= bound) ++total;
  });
  return total;
}

/// lcm over fundamental weights of denominator(<omega_j, a> / m), exact rationals.
inline std::uint64_t rational_lcm_denominator(const RootSystem& rs, const Weight& a, std::int64_t m) {
  std::uint64_t lcm = 1;
  for (int j = 0; j < rs.rank(); ++j) {
    const Rational v = inner_product(rs, fundamental_weight(rs, j), a) / Rational(m);
    lcm = std::lcm(lcm, static_cast<std::uint64_t>(v.denominator()));
  }
  return lcm;
}

/// prime -> number of regular weights whose denominators are all powers of that prime.
inline std::map<std::uint64_t, std::uint64_t> brute_completion_counts(const RootSystem& rs, std::int64_t m) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& a : box_regular_weights(rs, m)) {
    const auto p = naive_prime_power_base(rational_lcm_denominator(rs, a, m));
    if (p != 0) ++counts[p];
  }
  return counts;
}

}  // namespace verlinde::testing
