#include "verlinde/type_counters.hpp"

#include <stdexcept>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/number_theory.hpp"

// All half-integer tuples are counted in doubled coordinates: B_j = 2 b_j. A tuple
// lies in Z^n iff every B_j is even and in (Z + 1/2)^n iff every B_j is odd, so the
// lattice choice becomes a parity class q in {0, 1}. The irrational first coordinates
// of E_7 and E_6 enter through sqrt(2) b_1 and sqrt(3) b_1, which the conditions only
// ever use as a whole; T = 2 sqrt(2) b_1 and U = 2 sqrt(3) b_1 are the integer unknowns.

namespace verlinde {
namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

i64 mod(i64 a, i64 n) {
  const i64 r = a % n;
  return r < 0 ? r + n : r;
}

// smallest x >= v with x = r (mod n)
i64 align_up(i64 v, i64 r, i64 n) { return v + mod(r - v, n); }

// #{x in [lo, hi] : x = r (mod n)}
u64 count_congruent(i64 lo, i64 hi, i64 r, i64 n) {
  if (lo > hi) return 0;
  const i64 first = align_up(lo, r, n);
  if (first > hi) return 0;
  return static_cast<u64>((hi - first) / n + 1);
}

// Visits strictly decreasing x[0] > ... > x[k-1] >= 1 with every x[j] = parity (mod 2)
// and x[0] < ceiling. Branches are cut once the running sum of x[0..k-2] reaches sum_cap
// (the last element is excluded since callers pair it with a signed partner).
template <class Visit>
void for_each_chain(int k, i64 ceiling, int parity, i64 sum_cap, Visit&& visit) {
  std::vector<i64> x(static_cast<std::size_t>(k), 0);
  const i64 lowest = align_up(1, parity, 2);
  auto descend = [&](auto&& self, int j, i64 below, i64 partial) -> void {
    if (j == k) {
      visit(static_cast<const std::vector<i64>&>(x), partial);
      return;
    }
    // leave room for k-1-j smaller elements
    const i64 start = lowest + 2 * (k - 1 - j);
    for (i64 v = start; v < below; v += 2) {
      if (j + 1 < k && partial + v >= sum_cap) break;
      x[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, v, partial + v);
    }
  };
  if (k == 0) {
    visit(static_cast<const std::vector<i64>&>(x), i64{0});
    return;
  }
  for (i64 top = lowest + 2 * (k - 1); top < ceiling; top += 2) {
    if (k > 1 && top >= sum_cap) break;
    x[0] = top;
    descend(descend, 1, top, top);
  }
}

void require_rank(Series series, int n) { (void)make_lie_type(series, n); }

void require_args(i64 m, u64 p) {
  if (m < 1) throw std::invalid_argument("level must be >= 1, got " + std::to_string(m));
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

i64 prime_power_of(i64 m, u64 p) {
  require_args(m, p);
  return decompose_level(m, p).prime_power();
}

std::vector<int> parity_classes(u64 p) { return p == 2 ? std::vector<int>{0, 1} : std::vector<int>{0}; }

}  // namespace

std::int64_t LevelDecomposition::prime_power() const {
  return static_cast<std::int64_t>(checked_pow(prime, i));
}

LevelDecomposition decompose_level(std::int64_t m, std::uint64_t p, std::optional<std::int64_t> n_plus_1) {
  require_args(m, p);
  LevelDecomposition d;
  d.prime = p;
  d.i = p_adic_valuation(static_cast<u64>(m), p);
  d.m_prime = m / static_cast<i64>(checked_pow(p, d.i));
  if (n_plus_1) {
    if (*n_plus_1 < 1) throw std::invalid_argument("n+1 must be >= 1");
    d.ell = p_adic_valuation(static_cast<u64>(*n_plus_1), p);
    d.n_plus_1_prime = *n_plus_1 / static_cast<i64>(checked_pow(p, *d.ell));
  }
  return d;
}

ExceptionalReading parse_reading(const std::string& name) {
  if (name == "literal") return ExceptionalReading::literal;
  if (name == "alternate") return ExceptionalReading::alternate;
  throw std::invalid_argument("reading must be 'literal' or 'alternate', got '" + name + "'");
}

std::string to_string(ExceptionalReading reading) {
  return reading == ExceptionalReading::literal ? "literal" : "alternate";
}

u64 count_A(int n, i64 m, u64 p) {
  require_rank(Series::A, n);
  const LevelDecomposition d = decompose_level(m, p, n + 1);
  const i64 bound = d.prime_power();
  const i64 q = *d.n_plus_1_prime;
  // ways[k][r]: k-element subsets of the values seen so far with sum = r (mod q)
  std::vector<std::vector<u64>> ways(static_cast<std::size_t>(n) + 1, std::vector<u64>(static_cast<std::size_t>(q), 0));
  ways[0][0] = 1;
  for (i64 v = 1; v < bound; ++v) {
    for (int k = std::min<i64>(n, v); k >= 1; --k) {
      auto& row = ways[static_cast<std::size_t>(k)];
      const auto& prev = ways[static_cast<std::size_t>(k) - 1];
      for (i64 r = 0; r < q; ++r) {
        const auto target = static_cast<std::size_t>(mod(r + v, q));
        row[target] = checked_add(row[target], prev[static_cast<std::size_t>(r)]);
      }
    }
  }
  return ways[static_cast<std::size_t>(n)][0];
}

u64 count_B(int n, i64 m, u64 p) {
  require_rank(Series::B, n);
  const i64 bound = 2 * prime_power_of(m, p);  // B_1 + B_2 < 2 p^i
  u64 total = 0;
  for (int q : parity_classes(p)) {
    // tail (B_2, ..., B_n); B_1 > B_2 and B_1 + B_2 < bound force B_2 < bound / 2
    for_each_chain(n - 1, bound / 2 + 1, q, bound, [&](const std::vector<i64>& tail, i64 sum) {
      const i64 lo = tail[0] + 1;
      const i64 hi = bound - tail[0] - 1;
      total = checked_add(total, p == 2 ? count_congruent(lo, hi, q, 2) : count_congruent(lo, hi, mod(-sum, 4), 4));
    });
  }
  return total;
}

u64 count_C_closed_form(int n, i64 m, u64 p) {
  require_rank(Series::C, n);
  const i64 bound = prime_power_of(m, p);
  const i64 values = p == 2 ? bound - 1 : (bound - 1) / 2;
  return binomial(static_cast<u64>(values), static_cast<u64>(n));
}

u64 count_C(int n, i64 m, u64 p) {
  require_rank(Series::C, n);
  const i64 bound = prime_power_of(m, p);
  // ways[k]: strictly decreasing k-tuples drawn from the admissible values seen so far
  std::vector<u64> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (i64 v = 1; v < bound; ++v) {
    if (p != 2 && v % 2 != 0) continue;
    for (int k = n; k >= 1; --k)
      ways[static_cast<std::size_t>(k)] = checked_add(ways[static_cast<std::size_t>(k)], ways[static_cast<std::size_t>(k) - 1]);
  }
  const u64 scanned = ways[static_cast<std::size_t>(n)];
  const u64 closed = count_C_closed_form(n, m, p);
  if (scanned != closed) {
    throw InvariantViolation("type C count " + std::to_string(scanned) + " disagrees with closed form " +
                             std::to_string(closed) + " at n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                             ", p=" + std::to_string(p));
  }
  return scanned;
}

u64 count_D(int n, i64 m, u64 p) {
  require_rank(Series::D, n);
  const i64 bound = 2 * prime_power_of(m, p);
  u64 total = 0;
  for (int q : parity_classes(p)) {
    // tail (B_2, ..., B_{n-1}) plus the signed B_n with |B_n| < B_{n-1}
    for_each_chain(n - 2, bound / 2 + 1, q, INT64_MAX, [&](const std::vector<i64>& tail, i64 sum) {
      const i64 last = tail.back();
      const i64 lo = tail[0] + 1;
      const i64 hi = bound - tail[0] - 1;
      if (lo > hi) return;
      for (i64 bn = align_up(-last + 1, q, 2); bn < last; bn += 2) {
        total = checked_add(total, p == 2 ? count_congruent(lo, hi, q, 2) : count_congruent(lo, hi, mod(-(sum + bn), 4), 4));
      }
    });
  }
  return total;
}

u64 count_G2(i64 m, u64 p) {
  const i64 bound = prime_power_of(m, p);
  u64 total = 0;
  for (i64 b1 = 1; b1 < bound; ++b1) {
    for (i64 b2 = b1 / 2 + 1; b2 < b1; ++b2) {
      if (p != 3 && (b1 + b2) % 3 != 0) continue;
      ++total;
    }
  }
  return total;
}

u64 count_F4(i64 m, u64 p) {
  const i64 bound = 2 * prime_power_of(m, p);
  u64 total = 0;
  for (int q : parity_classes(p)) {
    for_each_chain(3, bound / 2 + 1, q, bound, [&](const std::vector<i64>& tail, i64 sum) {
      const i64 lo = sum + 1;  // B_1 > B_2 + B_3 + B_4
      const i64 hi = bound - tail[0] - 1;
      total = checked_add(total, p == 2 ? count_congruent(lo, hi, q, 2) : count_congruent(lo, hi, mod(-sum, 4), 4));
    });
  }
  return total;
}

u64 count_E8(i64 m, u64 p) {
  const i64 bound = 2 * prime_power_of(m, p);
  u64 total = 0;
  for (int q : {0, 1}) {
    // tail (B_2, ..., B_7) plus the signed B_8
    for_each_chain(6, bound / 2 + 1, q, bound, [&](const std::vector<i64>& tail, i64 sum) {
      const i64 last = tail.back();
      const i64 hi = bound - tail[0] - 1;
      for (i64 b8 = align_up(-last + 1, q, 2); b8 < last; b8 += 2) {
        const i64 lo = sum - b8 + 1;  // B_1 > B_2 + ... + B_7 - B_8
        // B_1 = q (mod 2) and 2 | (b_1 + ... + b_8)
        total = checked_add(total, count_congruent(lo, hi, mod(-(sum + b8), 4), 4));
      }
    });
  }
  return total;
}

u64 count_E7(i64 m, u64 p, ExceptionalReading reading) {
  const i64 bound = 2 * prime_power_of(m, p);  // T = 2 sqrt2 b_1 < 2 p^i
  const bool two_adic_conditions = p == 2 || reading == ExceptionalReading::alternate;
  u64 total = 0;
  for (int q : {0, 1}) {
    // tail (B_2, ..., B_6) plus the signed B_7
    for_each_chain(5, bound, q, bound, [&](const std::vector<i64>& tail, i64 sum) {
      const i64 last = tail.back();
      for (i64 b7 = align_up(-last + 1, q, 2); b7 < last; b7 += 2) {
        const i64 lo = sum - b7 + 1;  // sqrt2 b_1 > b_2 + ... + b_6 - b_7
        const i64 hi = bound - 1;
        if (two_adic_conditions) {
          // 2 | (sqrt2 b_1 + b_2 + ... + b_6 - b_7); the sum is even so T is even too
          total = checked_add(total, count_congruent(lo, hi, mod(-(sum - b7), 4), 4));
        } else {
          // 2 b_i = sqrt2 b_1 (mod 2) and 2 | (b_2 + ... + b_7)
          if (mod(sum + b7, 4) != 0) continue;
          total = checked_add(total, count_congruent(lo, hi, 2 * q, 4));
        }
      }
    });
  }
  return total;
}

u64 count_E6(i64 m, u64 p, ExceptionalReading reading) {
  const i64 bound = 4 * prime_power_of(m, p);  // U + B_2 + ... + B_6 < 4 p^i
  const bool sqrt3_multiple = p != 3 && reading == ExceptionalReading::literal;
  u64 total = 0;
  for (int q : {0, 1}) {
    // tail (B_2, ..., B_5) plus the signed B_6
    for_each_chain(4, bound / 2 + 1, q, bound, [&](const std::vector<i64>& tail, i64 sum) {
      const i64 last = tail.back();
      for (i64 b6 = align_up(-last + 1, q, 2); b6 < last; b6 += 2) {
        const i64 lo = sum - b6 + 1;        // sqrt3 b_1 > b_2 + ... + b_5 - b_6
        const i64 hi = bound - (sum + b6) - 1;
        // 2 | (sqrt3 b_1 + b_2 + ... + b_6) fixes U mod 4 (and with it the parity class)
        const i64 residue = mod(-(sum + b6), 4);
        if (!sqrt3_multiple) {
          total = checked_add(total, count_congruent(lo, hi, residue, 4));
          continue;
        }
        // sqrt3 b_1 in 3Z or 3(Z + 1/2): U = 0 (mod 3) as well
        for (i64 u = align_up(lo, residue, 4); u <= hi; u += 4)
          if (u % 3 == 0) total = checked_add(total, 1);
      }
    });
  }
  return total;
}

u64 count(LieType type, i64 m, u64 p, ExceptionalReading reading) {
  type = make_lie_type(type.series, type.rank);
  switch (type.series) {
    case Series::A: return count_A(type.rank, m, p);
    case Series::B: return count_B(type.rank, m, p);
    case Series::C: return count_C(type.rank, m, p);
    case Series::D: return count_D(type.rank, m, p);
    case Series::G: return count_G2(m, p);
    case Series::F: return count_F4(m, p);
    case Series::E:
      if (type.rank == 8) return count_E8(m, p);
      if (type.rank == 7) return count_E7(m, p, reading);
      return count_E6(m, p, reading);
  }
  throw std::invalid_argument("unknown Lie type");
}

}  // namespace verlinde
