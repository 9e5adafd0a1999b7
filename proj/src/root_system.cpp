#include "verlinde/root_system.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "verlinde/errors.hpp"

namespace verlinde {
namespace {

// <alpha_i, alpha_j> on simple roots (Bourbaki numbering), long roots of norm 2.
RationalMatrix simple_root_form(LieType type) {
  const int n = type.rank;
  RationalMatrix form(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  auto at = [&](int i, int j) -> Rational& { return form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  auto link = [&](int i, int j, Rational value) {
    at(i, j) = value;
    at(j, i) = value;
  };
  auto chain = [&](int from, int to, Rational value) {
    for (int i = from; i + 1 <= to; ++i) link(i, i + 1, value);
  };
  for (int i = 0; i < n; ++i) at(i, i) = 2;

  switch (type.series) {
    case Series::A:
      chain(0, n - 1, -1);
      break;
    case Series::B:
      at(n - 1, n - 1) = 1;
      chain(0, n - 1, -1);
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) at(i, i) = 1;
      chain(0, n - 2, Rational(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case Series::D:
      chain(0, n - 2, -1);
      link(n - 3, n - 1, -1);
      break;
    case Series::E:
      link(0, 2, -1);
      link(1, 3, -1);
      chain(2, n - 1, -1);
      break;
    case Series::F:
      at(2, 2) = 1;
      at(3, 3) = 1;
      link(0, 1, -1);
      link(1, 2, -1);
      link(2, 3, Rational(-1, 2));
      break;
    case Series::G:
      at(0, 0) = Rational(2, 3);
      link(0, 1, -1);
      break;
  }
  return form;
}

Weight highest_root_of(LieType type) {
  const int n = type.rank;
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
  auto set = [&](int i, std::int64_t v) { c[static_cast<std::size_t>(i)] = v; };
  switch (type.series) {
    case Series::A:
      if (n == 1) {
        set(0, 2);
      } else {
        set(0, 1);
        set(n - 1, 1);
      }
      break;
    case Series::B:
      set(1, n == 2 ? 2 : 1);
      break;
    case Series::C:
      set(0, 2);
      break;
    case Series::D:
      set(1, 1);
      if (n == 3) set(2, 1);
      break;
    case Series::E:
      if (n == 6) set(1, 1);
      if (n == 7) set(0, 1);
      if (n == 8) set(7, 1);
      break;
    case Series::F:
      set(0, 1);
      break;
    case Series::G:
      set(1, 1);
      break;
  }
  return Weight(std::move(c));
}

std::int64_t tabulated_dual_coxeter(LieType type) {
  const int n = type.rank;
  switch (type.series) {
    case Series::A: return n + 1;
    case Series::B: return 2 * n - 1;
    case Series::C: return n + 1;
    case Series::D: return 2 * n - 2;
    case Series::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Series::F: return 9;
    case Series::G: return 4;
  }
  return 0;
}

// Gauss-Jordan over the rationals; returns (inverse, determinant).
std::pair<RationalMatrix, Rational> invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw InvariantViolation("singular matrix");
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(inv[pivot], inv[col]);
      det = -det;
    }
    const Rational p = m[col][col];
    det *= p;
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return {std::move(inv), std::move(det)};
}

Rational determinant(const RationalMatrix& m) {
  try {
    return invert(m).second;
  } catch (const InvariantViolation&) {
    return 0;
  }
}

std::int64_t to_int64(const BigInt& value) {
  if (value > INT64_MAX || value < INT64_MIN) throw InvariantViolation("value exceeds 64 bits");
  return static_cast<std::int64_t>(value);
}

void require_rank(const RootSystem& rs, const Weight& w) {
  if (w.rank() != rs.rank()) {
    throw std::invalid_argument("weight " + w.str() + " has rank " + std::to_string(w.rank()) + ", expected " +
                                std::to_string(rs.rank()) + " for " + to_string(rs.type));
  }
}

}  // namespace

bool is_admissible(LieType type) noexcept {
  const int n = type.rank;
  switch (type.series) {
    case Series::A: return n >= 1;
    case Series::B: return n >= 2;
    case Series::C: return n >= 2;
    case Series::D: return n >= 3;
    case Series::E: return n >= 6 && n <= 8;
    case Series::F: return n == 4;
    case Series::G: return n == 2;
  }
  return false;
}

LieType make_lie_type(Series series, int rank) {
  LieType t{series, rank};
  if (!is_admissible(t)) {
    throw std::invalid_argument("inadmissible Lie type " + to_string(t) +
                                " (allowed: A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=3, E6, E7, E8, F4, G2)");
  }
  return t;
}

Series parse_series(char letter) {
  switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'A': return Series::A;
    case 'B': return Series::B;
    case 'C': return Series::C;
    case 'D': return Series::D;
    case 'E': return Series::E;
    case 'F': return Series::F;
    case 'G': return Series::G;
    default: break;
  }
  throw std::invalid_argument(std::string("unknown Lie series '") + letter + "'");
}

LieType parse_lie_type(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("Lie type name must look like A3 or E8, got '" + std::string(name) + "'");
  const Series series = parse_series(name.front());
  int rank = 0;
  for (char ch : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 100000) {
      throw std::invalid_argument("bad rank in Lie type '" + std::string(name) + "'");
    }
    rank = rank * 10 + (ch - '0');
  }
  return make_lie_type(series, rank);
}

std::string to_string(LieType type) { return std::string(1, static_cast<char>(type.series)) + std::to_string(type.rank); }

Weight& Weight::operator+=(const Weight& rhs) {
  if (rhs.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

RootSystem build_root_system(LieType type) {
  type = make_lie_type(type.series, type.rank);
  const auto n = static_cast<std::size_t>(type.rank);
  const RationalMatrix form = simple_root_form(type);

  RootSystem rs;
  rs.type = type;
  rs.cartan.assign(n, std::vector<std::int64_t>(n, 0));
  RationalMatrix cartan_q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    rs.symmetrizers.push_back(form[i][i] / 2);
    for (std::size_t j = 0; j < n; ++j) {
      cartan_q[i][j] = Rational(2) * form[i][j] / form[i][i];
      if (!cartan_q[i][j].is_integer()) throw InvariantViolation("non-integral Cartan entry for " + to_string(type));
      rs.cartan[i][j] = to_int64(cartan_q[i][j].numerator());
    }
  }

  auto [inverse, det] = invert(cartan_q);
  rs.connection_index = to_int64(det.numerator());
  if (rs.connection_index < 0) rs.connection_index = -rs.connection_index;

  rs.gram.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.gram[i][j] = rs.symmetrizers[i] * inverse[i][j];

  Rational longest;
  Rational shortest = rs.symmetrizers.front();
  for (const auto& d : rs.symmetrizers) {
    longest = std::max(longest, d);
    shortest = std::min(shortest, d);
  }
  rs.lacing_number = to_int64((longest / shortest).numerator());

  BigInt denominator = 1;
  for (const auto& row : rs.gram)
    for (const auto& x : row) denominator = boost::multiprecision::lcm(denominator, x.denominator());
  rs.gram_denominator = to_int64(denominator);
  rs.scaled_gram.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rs.scaled_gram[i][j] = to_int64((rs.gram[i][j] * Rational(rs.gram_denominator)).numerator());

  rs.highest_root = highest_root_of(type);
  rs.dual_coxeter_number = tabulated_dual_coxeter(type);
  for (int i = 0; i < type.rank; ++i) rs.marks.push_back(theta_level(rs, fundamental_weight(rs, i)));
  return rs;
}

Rational inner_product(const RootSystem& rs, const Weight& lhs, const Weight& rhs) {
  require_rank(rs, lhs);
  require_rank(rs, rhs);
  Rational total;
  for (int i = 0; i < rs.rank(); ++i) {
    if (lhs[i] == 0) continue;
    Rational row;
    for (int j = 0; j < rs.rank(); ++j) {
      if (rhs[j] == 0) continue;
      row += rs.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Rational(rhs[j]);
    }
    total += Rational(lhs[i]) * row;
  }
  return total;
}

std::int64_t theta_level(const RootSystem& rs, const Weight& a) {
  const Rational value = inner_product(rs, rs.highest_root, a);
  if (!value.is_integer()) {
    throw InvariantViolation("<theta, " + a.str() + "> = " + value.str() + " is not an integer for " + to_string(rs.type));
  }
  return to_int64(value.numerator());
}

Weight fundamental_weight(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::out_of_range("fundamental weight index out of range");
  std::vector<std::int64_t> c(static_cast<std::size_t>(rs.rank()), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return Weight(std::move(c));
}

Weight weyl_vector(const RootSystem& rs) {
  return Weight(std::vector<std::int64_t>(static_cast<std::size_t>(rs.rank()), 1));
}

Weight simple_root(const RootSystem& rs, int j) {
  if (j < 0 || j >= rs.rank()) throw std::out_of_range("simple root index out of range");
  std::vector<std::int64_t> c;
  for (const auto& row : rs.cartan) c.push_back(row[static_cast<std::size_t>(j)]);
  return Weight(std::move(c));
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> ValidationReport::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

ValidationReport validate(const RootSystem& rs) {
  ValidationReport report;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const auto n = static_cast<std::size_t>(rs.rank());
  bool shape = is_admissible(rs.type) && rs.cartan.size() == n && rs.gram.size() == n && rs.symmetrizers.size() == n &&
               rs.highest_root.rank() == rs.rank() && rs.marks.size() == n && rs.scaled_gram.size() == n;
  for (std::size_t i = 0; shape && i < n; ++i)
    shape = rs.cartan[i].size() == n && rs.gram[i].size() == n && rs.scaled_gram[i].size() == n;
  add("shape", shape, shape ? "" : "matrix or vector sizes disagree with rank");
  if (!shape) return report;

  {
    bool sym = true;
    std::string detail;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rs.gram[i][j] != rs.gram[j][i]) {
          sym = false;
          detail = "gram[" + std::to_string(i) + "][" + std::to_string(j) + "] != gram[" + std::to_string(j) + "][" +
                   std::to_string(i) + "]";
        }
    add("gram_symmetric", sym, detail);
  }

  {
    // Sylvester: all leading principal minors positive.
    bool pd = true;
    std::string detail;
    for (std::size_t k = 1; k <= n && pd; ++k) {
      RationalMatrix minor(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = rs.gram[i][j];
      const Rational det = determinant(minor);
      if (det.sign() <= 0) {
        pd = false;
        detail = "leading minor of order " + std::to_string(k) + " is " + det.str();
      }
    }
    add("gram_positive_definite", pd, detail);
  }

  {
    Rational longest;
    Rational shortest = rs.symmetrizers.empty() ? Rational(1) : rs.symmetrizers.front();
    for (const auto& d : rs.symmetrizers) {
      longest = std::max(longest, d);
      shortest = std::min(shortest, d);
    }
    const Rational theta_norm = inner_product(rs, rs.highest_root, rs.highest_root);
    const bool ok = longest == Rational(1) && theta_norm == Rational(2) && shortest.sign() > 0 &&
                    longest / shortest == Rational(rs.lacing_number);
    add("long_root_norm", ok,
        ok ? "" : "max <alpha,alpha>/2 = " + longest.str() + ", <theta,theta> = " + theta_norm.str());
  }

  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < rs.rank(); ++i) {
      for (int j = 0; j < rs.rank(); ++j) {
        const Rational got = inner_product(rs, fundamental_weight(rs, i), simple_root(rs, j));
        const Rational want = i == j ? rs.symmetrizers[static_cast<std::size_t>(j)] : Rational(0);
        if (got != want) {
          ok = false;
          detail = "<omega_" + std::to_string(i + 1) + ", alpha_" + std::to_string(j + 1) + "> = " + got.str();
        }
      }
    }
    add("weight_root_duality", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < rs.rank(); ++i) {
      const Rational v = inner_product(rs, rs.highest_root, fundamental_weight(rs, i));
      if (!v.is_integer() || v.sign() < 0) {
        ok = false;
        detail = "<theta, omega_" + std::to_string(i + 1) + "> = " + v.str();
      } else if (static_cast<std::int64_t>(v.numerator()) != rs.marks[static_cast<std::size_t>(i)]) {
        ok = false;
        detail = "stored mark " + std::to_string(i + 1) + " disagrees with gram";
      }
    }
    add("theta_integral", ok, detail);
  }

  {
    RationalMatrix cq(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cq[i][j] = rs.cartan[i][j];
    Rational det = determinant(cq);
    if (det.sign() < 0) det = -det;
    bool ok = det == Rational(rs.connection_index);
    std::string detail = ok ? "" : "|det cartan| = " + det.str() + ", stored " + std::to_string(rs.connection_index);
    // d_i is 1 or 1/lacing and inverse(cartan) has denominators dividing f
    const Rational bound(rs.lacing_number * rs.connection_index);
    if (ok && rs.gram_denominator > 0 && !(bound / Rational(rs.gram_denominator)).is_integer()) {
      ok = false;
      detail = "gram denominator " + std::to_string(rs.gram_denominator) + " does not divide lacing * f = " + bound.str();
    }
    for (std::size_t i = 0; ok && i < n; ++i) {
      for (std::size_t j = 0; ok && j < n; ++j) {
        const Rational scaled = rs.gram[i][j] * Rational(rs.gram_denominator);
        if (!scaled.is_integer() || scaled != Rational(rs.scaled_gram[i][j])) {
          ok = false;
          detail = "gram[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + rs.gram[i][j].str() +
                   " has a denominator outside lacing * f = " + bound.str();
        }
      }
    }
    add("gram_denominators", ok, detail);
  }

  {
    const std::int64_t expected = tabulated_dual_coxeter(rs.type);
    const Rational theta_rho = inner_product(rs, rs.highest_root, weyl_vector(rs));
    const bool ok = rs.dual_coxeter_number == expected && theta_rho == Rational(expected - 1);
    add("dual_coxeter", ok,
        ok ? "" : "<theta,rho> = " + theta_rho.str() + ", tabulated h^vee = " + std::to_string(expected));
  }

  return report;
}

}  // namespace verlinde
