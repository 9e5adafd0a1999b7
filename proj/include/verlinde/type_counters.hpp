#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "verlinde/root_system.hpp"

namespace verlinde {

/// m = p^i * m', and optionally n+1 = p^ell * (n+1)', with p dividing neither m' nor (n+1)'.
struct LevelDecomposition {
  std::uint64_t prime = 2;
  int i = 0;
  std::int64_t m_prime = 1;
  std::optional<int> ell;
  std::optional<std::int64_t> n_plus_1_prime;

  /// p^i
  std::int64_t prime_power() const;
};

/// Throws std::invalid_argument unless m >= 1, p is prime and n_plus_1 (if given) >= 1.
LevelDecomposition decompose_level(std::int64_t m, std::uint64_t p, std::optional<std::int64_t> n_plus_1 = std::nullopt);

/// Which reading of the E_6 / E_7 tuple conditions to count.
///   literal:   the conditions exactly as stated per prime.
///   alternate: E_7 uses the p = 2 conditions for every p; E_6 uses the (1/sqrt3)-scaled
///              tuple set for every p.
enum class ExceptionalReading { literal, alternate };

ExceptionalReading parse_reading(const std::string& name);
std::string to_string(ExceptionalReading reading);

// Each counter returns the number of tuples (b_1, ..., b_n) meeting the per-type
// inequalities and divisibility conditions for the prime p at level m. All of them
// are 0 when p does not divide m.
std::uint64_t count_A(int n, std::int64_t m, std::uint64_t p);
std::uint64_t count_B(int n, std::int64_t m, std::uint64_t p);
/// Direct count, cross-checked against the binomial closed form before returning.
std::uint64_t count_C(int n, std::int64_t m, std::uint64_t p);
std::uint64_t count_D(int n, std::int64_t m, std::uint64_t p);
std::uint64_t count_G2(std::int64_t m, std::uint64_t p);
std::uint64_t count_F4(std::int64_t m, std::uint64_t p);
std::uint64_t count_E8(std::int64_t m, std::uint64_t p);
std::uint64_t count_E7(std::int64_t m, std::uint64_t p, ExceptionalReading reading = ExceptionalReading::literal);
std::uint64_t count_E6(std::int64_t m, std::uint64_t p, ExceptionalReading reading = ExceptionalReading::literal);

/// Closed forms for type C: C(2^i - 1, n) for p = 2, C((p^i - 1)/2, n) otherwise.
std::uint64_t count_C_closed_form(int n, std::int64_t m, std::uint64_t p);

/// Dispatches to the counter of the given type.
std::uint64_t count(LieType type, std::int64_t m, std::uint64_t p,
                    ExceptionalReading reading = ExceptionalReading::literal);

}  // namespace verlinde
