#include "turanlab/squarezero.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "turanlab/combinatorics.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/hypergraph.hpp"

namespace turanlab {
namespace {

constexpr int kMaxQuotientVars = 30;

VertexSet all_vertices(int n) { return (VertexSet{1} << n) - 1; }

// standard d-subsets inside `candidates`
std::int64_t count_independent(const std::vector<VertexSet>& adjacency, VertexSet candidates, int d) {
  if (d == 0) return 1;
  if (vertex_count(candidates) < d) return 0;
  if (d == 1) return vertex_count(candidates);
  std::int64_t total = 0;
  for (VertexSet rest = candidates; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const VertexSet later = rest & ~(VertexSet{1} << v);
    total += count_independent(adjacency, later & ~adjacency[v], d - 1);
  }
  return total;
}

}  // namespace

SquareZeroQuotient::SquareZeroQuotient(int n) : n_(n) {
  if (n < 0 || n > kMaxQuotientVars) throw ArgumentError("SquareZeroQuotient: n must lie in [0, 30]");
  adjacency_.assign(static_cast<std::size_t>(n), 0);
}

SquareZeroQuotient::SquareZeroQuotient(int n, std::span<const std::pair<int, int>> kill_pairs)
    : SquareZeroQuotient(n) {
  for (auto [a, b] : kill_pairs) kill(a, b);
}

SquareZeroQuotient SquareZeroQuotient::balanced_partite(int n, int q) {
  SquareZeroQuotient out(n);
  const auto labels = balanced_part_labels(n, q);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (labels[a] == labels[b]) out.kill(a, b);
    }
  }
  return out;
}

SquareZeroQuotient SquareZeroQuotient::from_pair_mask(int n, std::uint64_t mask) {
  SquareZeroQuotient out(n);
  const EdgeUniverse pairs(std::max(n, 2), 2);
  for (int i = 0; i < pairs.size() && i < 64; ++i) {
    if ((mask >> i) & 1U) {
      const auto v = vertices_of(pairs.edge(i));
      out.kill(v[0], v[1]);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> SquareZeroQuotient::kill_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (killed(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

void SquareZeroQuotient::kill(int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw ArgumentError("SquareZeroQuotient: kill pair needs distinct endpoints in [n]");
  }
  adjacency_[a] |= VertexSet{1} << b;
  adjacency_[b] |= VertexSet{1} << a;
}

void SquareZeroQuotient::revive(int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw ArgumentError("SquareZeroQuotient: pair needs distinct endpoints in [n]");
  }
  adjacency_[a] &= ~(VertexSet{1} << b);
  adjacency_[b] &= ~(VertexSet{1} << a);
}

std::int64_t hilbert(const SquareZeroQuotient& a, int d) {
  if (d < 0) return 0;
  return count_independent(a.adjacency(), all_vertices(a.n()), d);
}

bool top_vanishing(const SquareZeroQuotient& a, int q) {
  if (q < 0) throw ArgumentError("top_vanishing: q must be nonnegative");
  return hilbert(a, q + 1) == 0;
}

bool is_standard(const SquareZeroQuotient& a, VertexSet vertices) {
  for (VertexSet rest = vertices; rest != 0; rest &= rest - 1) {
    if (a.kill_neighbors(std::countr_zero(rest)) & vertices) return false;
  }
  return true;
}

int ParallelPartition::class_of(int v) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if ((classes[i] >> v) & 1U) return static_cast<int>(i);
  }
  return -1;
}

ParallelPartition parallel_classes(const SquareZeroQuotient& a) {
  // true twins: equal closed kill neighbourhoods
  std::map<VertexSet, VertexSet> by_closed;
  std::vector<VertexSet> order;
  for (int v = 0; v < a.n(); ++v) {
    const VertexSet closed = a.kill_neighbors(v) | (VertexSet{1} << v);
    auto [it, inserted] = by_closed.try_emplace(closed, 0);
    it->second |= VertexSet{1} << v;
    if (inserted) order.push_back(closed);
  }
  ParallelPartition out;
  for (VertexSet key : order) out.classes.push_back(by_closed[key]);
  const std::size_t k = out.classes.size();
  out.cross_zero.assign(k, std::vector<bool>(k, true));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const int rep = std::countr_zero(out.classes[i]);
      out.cross_zero[i][j] = (a.kill_neighbors(rep) & out.classes[j]) == out.classes[j];
    }
  }
  return out;
}

std::int64_t lambda(const SquareZeroQuotient& a, int c, int d) {
  if (c < 0 || c >= a.n()) throw ArgumentError("lambda: variable index out of range");
  if (d < 0) return 0;
  const VertexSet allowed = all_vertices(a.n()) & ~a.kill_neighbors(c) & ~(VertexSet{1} << c);
  return count_independent(a.adjacency(), allowed, d);
}

SquareZeroQuotient clone(const SquareZeroQuotient& a, VertexSet u, VertexSet v, CloneDirection direction) {
  const ParallelPartition partition = parallel_classes(a);
  const auto is_class = [&](VertexSet s) {
    return std::find(partition.classes.begin(), partition.classes.end(), s) != partition.classes.end();
  };
  if (u == 0 || v == 0 || u == v || !is_class(u) || !is_class(v)) {
    throw PreconditionError("clone: U and V must be distinct parallel classes");
  }
  const int u_rep = std::countr_zero(u);
  if ((a.kill_neighbors(u_rep) & v) != v) {
    throw PreconditionError("clone: products between U and V must all vanish");
  }
  const VertexSet source = direction == CloneDirection::kVFromU ? u : v;
  const VertexSet target = direction == CloneDirection::kVFromU ? v : u;
  const VertexSet merged = u | v;
  const int source_rep = std::countr_zero(source);

  SquareZeroQuotient out = a;
  for (int t : vertices_of(target)) {
    for (int z = 0; z < a.n(); ++z) {
      if ((merged >> z) & 1U) continue;
      if (a.killed(source_rep, z)) {
        out.kill(t, z);
      } else {
        out.revive(t, z);
      }
    }
  }
  // U and V already have all internal and cross products zero
  return out;
}

SymmetrizeResult symmetrize(const SquareZeroQuotient& a, int q, int r) {
  if (!top_vanishing(a, q)) throw PreconditionError("symmetrize: A_{q+1} must vanish");
  SymmetrizeResult result{a, {}, {}};
  for (;;) {
    const ParallelPartition partition = parallel_classes(result.terminal);
    // classes are listed by smallest member, so the first hit is the
    // lexicographically least pair
    int first = -1;
    int second = -1;
    for (std::size_t i = 0; i < partition.classes.size() && first < 0; ++i) {
      for (std::size_t j = i + 1; j < partition.classes.size(); ++j) {
        if (partition.cross_zero[i][j]) {
          first = static_cast<int>(i);
          second = static_cast<int>(j);
          break;
        }
      }
    }
    if (first < 0) {
      result.classes = partition.classes;
      return result;
    }
    const VertexSet u = partition.classes[first];
    const VertexSet v = partition.classes[second];
    SymmetrizeStep step{};
    step.u = u;
    step.v = v;
    step.lambda_u = lambda(result.terminal, std::countr_zero(u), r - 1);
    step.lambda_v = lambda(result.terminal, std::countr_zero(v), r - 1);
    step.direction = step.lambda_u >= step.lambda_v ? CloneDirection::kVFromU : CloneDirection::kUFromV;
    step.hilbert_before = hilbert(result.terminal, r);
    result.terminal = clone(result.terminal, u, v, step.direction);
    step.hilbert_after = hilbert(result.terminal, r);
    result.trace.push_back(step);
  }
}

SmoothingResult smoothing_step(std::span<const std::int64_t> values, int r) {
  SmoothingResult out{{values.begin(), values.end()}, 0, false};
  if (values.size() < 2) return out;
  const auto max_it = std::max_element(values.begin(), values.end());
  const auto min_it = std::min_element(values.begin(), values.end());
  const std::int64_t a = *max_it;
  const std::int64_t b = *min_it;
  if (a < b + 2) return out;
  const auto ia = static_cast<std::size_t>(max_it - values.begin());
  const auto ib = static_cast<std::size_t>(min_it - values.begin());
  std::vector<std::int64_t> rest;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != ia && i != ib) rest.push_back(values[i]);
  }
  out.values[ia] = a - 1;
  out.values[ib] = b + 1;
  out.delta = (a - b - 1) * elem_sym(rest, r - 2);
  out.changed = true;
  return out;
}

HilbertTuranReport brute_force_hilbert_turan(int n, int q, int r) {
  if (n < 1 || n > 7) throw ScaleGuardError("brute_force_hilbert_turan: exhaustive range is 1 <= n <= 7");
  if (q < 1 || r < 0) throw ArgumentError("brute_force_hilbert_turan: need q >= 1 and r >= 0");
  HilbertTuranReport report;
  report.n = n;
  report.q = q;
  report.r = r;
  report.bound = turan_count(n, q, r);
  const int pair_count = static_cast<int>(binomial(n, 2));
  const std::uint64_t limit = std::uint64_t{1} << pair_count;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const auto a = SquareZeroQuotient::from_pair_mask(n, mask);
    if (!top_vanishing(a, q)) continue;
    ++report.checked;
    const std::int64_t h = hilbert(a, r);
    report.max_found = std::max(report.max_found, h);
    if (h > report.bound) ++report.violations;
  }
  const auto balanced = SquareZeroQuotient::balanced_partite(n, q);
  report.balanced_attains = top_vanishing(balanced, q) && hilbert(balanced, r) == report.bound;
  return report;
}

}  // namespace turanlab
