#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "verlinde/rational.hpp"
#include "verlinde/root_system.hpp"

namespace verlinde {

/// Exact phase of psi_a(w) = exp(2 pi i <w,a>/m), as <w,a>/m reduced into [0, 1).
struct RotationNumber {
  Rational value;
};

/// Throws std::invalid_argument for m < 1.
RotationNumber phi_phase(const RootSystem& rs, const Weight& a, std::int64_t m, const Weight& w);

struct DenominatorProfile {
  Weight weight;
  /// lcm over fundamental weights omega_j of denominator(<omega_j, a> / m)
  std::uint64_t lcm_denominator = 1;
};

/// Throws InvariantViolation when every phase of a is trivial (D_a = 1), which cannot
/// happen for a regular weight.
DenominatorProfile denominator_profile(const RootSystem& rs, const Weight& a, std::int64_t m);

struct PrimePower {
  std::uint64_t prime = 0;
  int exponent = 0;
};
struct Mixed {};
using Classification = std::variant<PrimePower, Mixed>;

/// PrimePower(p, k) iff D_a = p^k; Mixed otherwise. Rejects D_a = 1.
Classification classify(const DenominatorProfile& profile);

/// The completed Verlinde algebra as a sum of Z_p^{counts[p]}.
struct CompletionProfile {
  LieType group;
  std::int64_t level = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t regular_total = 0;
  /// regular weights whose D_a is not a prime power
  std::uint64_t unclassified = 0;

  std::uint64_t multiplicity(std::uint64_t p) const;
  /// "Z_2^3 + Z_3", or "0" for the zero group.
  std::string render() const;
};

CompletionProfile completion_profile(const RootSystem& rs, std::int64_t m);

/// Prime divisors of connection_index * m; no other prime can carry a nonzero count.
std::vector<std::uint64_t> candidate_primes(const RootSystem& rs, std::int64_t m);

}  // namespace verlinde
