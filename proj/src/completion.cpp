#include "verlinde/completion.hpp"

#include <numeric>
#include <stdexcept>

#include "verlinde/alcove.hpp"
#include "verlinde/errors.hpp"
#include "verlinde/number_theory.hpp"

namespace verlinde {
namespace {

void require_level(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("level must be >= 1, got " + std::to_string(m));
}

// D_a from the integral matrix L*G: <omega_j, a>/m = (L*G a)_j / (L*m), L = gram_denominator.
std::uint64_t lcm_of_phase_denominators(const RootSystem& rs, const Weight& a, std::int64_t m) {
  if (a.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
  const __int128 fm = static_cast<__int128>(rs.gram_denominator) * m;
  if (fm > INT64_MAX) throw std::overflow_error("gram denominator times level exceeds 64 bits");
  const auto modulus = static_cast<std::int64_t>(fm);
  std::uint64_t lcm = 1;
  for (const auto& row : rs.scaled_gram) {
    __int128 numerator = 0;
    for (int k = 0; k < rs.rank(); ++k) numerator += static_cast<__int128>(row[static_cast<std::size_t>(k)]) * a[k];
    auto residue = static_cast<std::int64_t>(numerator % modulus);
    if (residue < 0) residue += modulus;
    const auto denominator = static_cast<std::uint64_t>(modulus / std::gcd(residue, modulus));
    lcm = lcm_u64(lcm, denominator);
  }
  return lcm;
}

}  // namespace

RotationNumber phi_phase(const RootSystem& rs, const Weight& a, std::int64_t m, const Weight& w) {
  require_level(m);
  return {(inner_product(rs, w, a) / Rational(m)).fractional_part()};
}

DenominatorProfile denominator_profile(const RootSystem& rs, const Weight& a, std::int64_t m) {
  require_level(m);
  DenominatorProfile profile{a, lcm_of_phase_denominators(rs, a, m)};
  if (profile.lcm_denominator == 1) {
    throw InvariantViolation("weight " + a.str() + " of " + to_string(rs.type) + " at level " + std::to_string(m) +
                             " has integral pairing with every weight; the augmentation would factor through "
                             "its evaluation map");
  }
  return profile;
}

Classification classify(const DenominatorProfile& profile) {
  if (profile.lcm_denominator <= 1) throw InvariantViolation("classify: denominator must exceed 1");
  if (auto split = as_prime_power(profile.lcm_denominator)) return PrimePower{split->prime, split->exponent};
  return Mixed{};
}

std::uint64_t CompletionProfile::multiplicity(std::uint64_t p) const {
  auto it = counts.find(p);
  return it == counts.end() ? 0 : it->second;
}

std::string CompletionProfile::render() const {
  if (counts.empty()) return "0";
  std::string out;
  for (const auto& [p, k] : counts) {
    if (!out.empty()) out += " + ";
    out += "Z_" + std::to_string(p);
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

CompletionProfile completion_profile(const RootSystem& rs, std::int64_t m) {
  require_level(m);
  CompletionProfile profile;
  profile.group = rs.type;
  profile.level = m;
  for_each_regular_weight(rs, m, [&](const Weight& a) {
    ++profile.regular_total;
    const Classification c = classify(denominator_profile(rs, a, m));
    if (const auto* pp = std::get_if<PrimePower>(&c)) {
      ++profile.counts[pp->prime];
    } else {
      ++profile.unclassified;
    }
  });
  return profile;
}

std::vector<std::uint64_t> candidate_primes(const RootSystem& rs, std::int64_t m) {
  require_level(m);
  return prime_divisors(checked_mul(static_cast<std::uint64_t>(rs.connection_index), static_cast<std::uint64_t>(m)));
}

}  // namespace verlinde
