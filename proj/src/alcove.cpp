#include "verlinde/alcove.hpp"

#include <numeric>
#include <stdexcept>

#include "verlinde/errors.hpp"
#include "verlinde/number_theory.hpp"

namespace verlinde {
namespace {

void require_level(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("level must be >= 1, got " + std::to_string(m));
}

void require_positive_marks(const RootSystem& rs) {
  for (auto mark : rs.marks)
    if (mark < 1) throw InvariantViolation("non-positive mark of the highest root for " + to_string(rs.type));
}

}  // namespace

void for_each_regular_weight(const RootSystem& rs, std::int64_t m, const std::function<void(const Weight&)>& visit) {
  require_level(m);
  require_positive_marks(rs);
  const int n = rs.rank();
  // tail_min[i]: smallest <theta, .> contribution of coordinates i..n-1 when each is 1
  std::vector<std::int64_t> tail_min(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    tail_min[static_cast<std::size_t>(i)] = tail_min[static_cast<std::size_t>(i) + 1] + rs.marks[static_cast<std::size_t>(i)];

  std::vector<std::int64_t> coords(static_cast<std::size_t>(n), 0);
  const std::function<void(int, std::int64_t)> descend = [&](int i, std::int64_t budget) {
    if (i == n) {
      visit(Weight(coords));
      return;
    }
    const auto idx = static_cast<std::size_t>(i);
    const std::int64_t mark = rs.marks[idx];
    const std::int64_t room = budget - tail_min[idx + 1];
    for (std::int64_t c = 1; c * mark <= room; ++c) {
      coords[idx] = c;
      descend(i + 1, budget - c * mark);
    }
  };
  descend(0, m - 1);
}

RegularWeightSet enumerate_regular_weights(const RootSystem& rs, std::int64_t m) {
  RegularWeightSet set{m, {}};
  for_each_regular_weight(rs, m, [&](const Weight& a) { set.weights.push_back(a); });
  return set;
}

std::uint64_t count_regular_weights(const RootSystem& rs, std::int64_t m) {
  require_level(m);
  require_positive_marks(rs);
  // Shift a = lambda + rho: count lambda >= 0 with sum marks[i] * lambda[i] <= m - 1 - sum(marks).
  const std::int64_t slack = m - 1 - std::accumulate(rs.marks.begin(), rs.marks.end(), std::int64_t{0});
  if (slack < 0) return 0;
  // ways[s] = number of lambda over the processed coordinates with weighted sum exactly s
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(slack) + 1, 0);
  ways[0] = 1;
  for (auto mark : rs.marks) {
    for (std::int64_t s = mark; s <= slack; ++s)
      ways[static_cast<std::size_t>(s)] = checked_add(ways[static_cast<std::size_t>(s)], ways[static_cast<std::size_t>(s - mark)]);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total = checked_add(total, w);
  return total;
}

}  // namespace verlinde
