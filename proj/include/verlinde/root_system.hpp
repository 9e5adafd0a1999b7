#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "verlinde/rational.hpp"

namespace verlinde {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Type of a simple simply connected compact Lie group, e.g. {Series::E, 8}.
struct LieType {
  Series series = Series::A;
  int rank = 1;

  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=3, E_6..E_8, F_4, G_2.
bool is_admissible(LieType type) noexcept;

/// Throws std::invalid_argument for an inadmissible (series, rank) pair.
LieType make_lie_type(Series series, int rank);
Series parse_series(char letter);
/// Parses names such as "A3", "e8", "G2".
LieType parse_lie_type(std::string_view name);
std::string to_string(LieType type);

/// Integral weight in the fundamental-weight basis: a = sum_i coords[i] * omega_i.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(coords_.size()); }
  std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  Weight& operator+=(const Weight& rhs);
  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }

  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string str() const;

 private:
  std::vector<std::int64_t> coords_;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact Lie data for one simple type, normalized so that long roots have norm 2.
///
/// Cartan convention: cartan[i][j] = <alpha_i^vee, alpha_j>, so the fundamental-weight
/// coordinates of alpha_j form column j. Built by build_root_system() and never
/// mutated afterwards; the fields are public so validate() can be exercised on
/// deliberately damaged copies.
struct RootSystem {
  LieType type;
  IntMatrix cartan;
  /// d_j = <alpha_j, alpha_j> / 2
  std::vector<Rational> symmetrizers;
  /// gram[i][j] = <omega_i, omega_j>
  RationalMatrix gram;
  Weight highest_root;
  /// |det(cartan)|
  std::int64_t connection_index = 1;
  /// ratio of long to short root norms: 1, 2 or 3
  std::int64_t lacing_number = 1;
  /// lcm of the gram denominators; divides lacing_number * connection_index.
  std::int64_t gram_denominator = 1;
  /// h^vee, with <theta, rho> = h^vee - 1.
  std::int64_t dual_coxeter_number = 1;
  /// marks[i] = <theta, omega_i>, the comarks of the highest root.
  std::vector<std::int64_t> marks;
  /// gram_denominator * gram, integral.
  IntMatrix scaled_gram;

  int rank() const { return type.rank; }
};

RootSystem build_root_system(LieType type);

Rational inner_product(const RootSystem& rs, const Weight& lhs, const Weight& rhs);

/// <theta, a>; throws InvariantViolation when the exact value is not an integer.
std::int64_t theta_level(const RootSystem& rs, const Weight& a);

Weight fundamental_weight(const RootSystem& rs, int i);
/// rho, the sum of the fundamental weights.
Weight weyl_vector(const RootSystem& rs);
/// alpha_j in the fundamental-weight basis (column j of the Cartan matrix).
Weight simple_root(const RootSystem& rs, int j);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  std::vector<std::string> failed_checks() const;
};

/// Re-derives every structural invariant of rs and reports each one.
ValidationReport validate(const RootSystem& rs);

}  // namespace verlinde
