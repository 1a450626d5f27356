#include "turanlab/combinatorics.hpp"

#include <algorithm>

#include "turanlab/errors.hpp"

namespace turanlab {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

std::int64_t elem_sym(std::span<const std::int64_t> values, int r) {
  if (r < 0 || r > static_cast<int>(values.size())) return 0;
  // table[d] = e_d of the prefix processed so far
  std::vector<std::int64_t> table(static_cast<std::size_t>(r) + 1, 0);
  table[0] = 1;
  for (std::int64_t v : values) {
    for (int d = r; d >= 1; --d) table[d] += v * table[d - 1];
  }
  return table[r];
}

std::vector<int> balanced_part_sizes(int n, int q) {
  if (q < 1 || n < 0) throw ArgumentError("balanced_part_sizes: need q >= 1 and n >= 0");
  std::vector<int> sizes(static_cast<std::size_t>(q), n / q);
  for (int i = 0; i < n % q; ++i) ++sizes[i];
  return sizes;
}

std::vector<int> balanced_part_labels(int n, int q) {
  const auto sizes = balanced_part_sizes(n, q);
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int part = 0; part < q; ++part) labels.insert(labels.end(), sizes[part], part);
  return labels;
}

bool for_each_k_subset(int n, int k, const std::function<bool(VertexSet)>& fn) {
  if (k < 0 || k > n) return true;
  if (n > kMaxVertices) throw ArgumentError("for_each_k_subset: n exceeds 32");
  if (k == 0) return fn(0);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit; s = next_same_popcount(s)) {
    if (!fn(static_cast<VertexSet>(s))) return false;
  }
  return true;
}

}  // namespace turanlab
