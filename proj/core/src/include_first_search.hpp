#pragma once

// Exact include-first depth-first search over subsets of a ranked universe,
// shared by the brute-force extremal oracles.

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "turanlab/support.hpp"

namespace turanlab::detail {

struct SubsetSearchModel {
  int universe_size = 0;
  // Whether `with_new` (which includes `new_index`) remains feasible.
  std::function<bool(Support with_new, int new_index)> admissible;
  std::function<std::int64_t(Support chosen)> value;
  // Upper bound on value() over completions, given decisions for [0, next).
  std::function<std::int64_t(Support chosen, int next)> bound;
};

struct SubsetSearchBest {
  std::int64_t value = -1;
  Support witness;
};

class SubsetSearcher {
 public:
  SubsetSearcher(const SubsetSearchModel& model, std::atomic<std::int64_t>& global_best)
      : model_(model), global_best_(global_best) {}

  void run(int next, Support chosen) { dfs(next, chosen); }
  const SubsetSearchBest& best() const { return best_; }

 private:
  void dfs(int next, Support chosen) {
    if (next == model_.universe_size) {
      const std::int64_t v = model_.value(chosen);
      if (v > best_.value) {
        best_ = {v, chosen};
        std::int64_t seen = global_best_.load(std::memory_order_relaxed);
        while (v > seen && !global_best_.compare_exchange_weak(seen, v)) {
        }
      }
      return;
    }
    const std::int64_t optimistic = model_.bound(chosen, next);
    // Equal-valued leaves later in the order are never canonical, but other
    // subtrees may still hold a global optimum equal to the shared bound.
    if (optimistic <= best_.value || optimistic < global_best_.load(std::memory_order_relaxed)) return;
    const Support with = chosen | Support::single(next);
    if (model_.admissible(with, next)) dfs(next + 1, with);
    dfs(next + 1, chosen);
  }

  const SubsetSearchModel& model_;
  std::atomic<std::int64_t>& global_best_;
  SubsetSearchBest best_;
};

// Returns the maximum of value() and the first optimal leaf in include-first
// order, which is the canonical_less-minimal optimum. Identical for every
// thread count.
inline SubsetSearchBest run_subset_search(const SubsetSearchModel& model, int threads) {
  std::atomic<std::int64_t> global_best{-1};
  if (threads <= 1 || model.universe_size < 4) {
    SubsetSearcher searcher(model, global_best);
    searcher.run(0, Support{});
    return searcher.best();
  }

  // Split into feasible prefixes of fixed depth, listed in leaf order.
  int depth = 0;
  while (depth < model.universe_size && (1 << depth) < 8 * threads) ++depth;
  struct Task {
    Support chosen;
  };
  std::vector<Task> tasks;
  std::function<void(int, Support)> expand = [&](int next, Support chosen) {
    if (next == depth) {
      tasks.push_back({chosen});
      return;
    }
    const Support with = chosen | Support::single(next);
    if (model.admissible(with, next)) expand(next + 1, with);
    expand(next + 1, chosen);
  };
  expand(0, Support{});

  std::vector<SubsetSearchBest> results(tasks.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor.fetch_add(1); i < tasks.size(); i = cursor.fetch_add(1)) {
      SubsetSearcher searcher(model, global_best);
      searcher.run(depth, tasks[i].chosen);
      results[i] = searcher.best();
    }
  };
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  SubsetSearchBest best;
  for (const auto& r : results) {
    if (r.value > best.value) best = r;
  }
  return best;
}

}  // namespace turanlab::detail
