#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "verlinde/root_system.hpp"

namespace verlinde {

/// Integral weights strictly inside the level-m fundamental alcove, in lexicographic order.
struct RegularWeightSet {
  std::int64_t level = 0;
  std::vector<Weight> weights;
};

/// Calls visit(a) for every a with all coords >= 1 and <theta, a> <= m - 1, in lexicographic order.
/// Throws std::invalid_argument for m < 1.
void for_each_regular_weight(const RootSystem& rs, std::int64_t m, const std::function<void(const Weight&)>& visit);

RegularWeightSet enumerate_regular_weights(const RootSystem& rs, std::int64_t m);

/// Number of regular weights at level m, counted without materializing them.
std::uint64_t count_regular_weights(const RootSystem& rs, std::int64_t m);

}  // namespace verlinde
