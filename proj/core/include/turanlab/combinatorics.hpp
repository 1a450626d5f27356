#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "turanlab/support.hpp"

namespace turanlab {

// Exact binomial coefficient; zero outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

// Elementary symmetric polynomial e_r of the entries; e_0 = 1 and e_r = 0
// for r < 0 or r > size.
std::int64_t elem_sym(std::span<const std::int64_t> values, int r);

// Sizes of the balanced partition of n items into q parts, larger parts
// first (the first n mod q parts get ceil(n/q) items).
std::vector<int> balanced_part_sizes(int n, int q);

// Part index of each of the n items under balanced_part_sizes(n, q), items
// assigned to parts in index order.
std::vector<int> balanced_part_labels(int n, int q);

// Calls `fn` with every k-subset of [0, n) as a bitmask, in colexicographic
// order. Stops early when `fn` returns false; returns false in that case.
bool for_each_k_subset(int n, int k, const std::function<bool(VertexSet)>& fn);

// Gosper's hack: the next larger integer with the same popcount.
constexpr std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace turanlab
