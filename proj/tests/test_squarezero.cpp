#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "turanlab/combinatorics.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/selftest.hpp"
#include "turanlab/squarezero.hpp"

using namespace turanlab;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

VertexSet vs(std::initializer_list<int> one_based) {
  VertexSet s = 0;
  for (int v : one_based) s |= VertexSet{1} << (v - 1);
  return s;
}

// 1-based pair list, as written in the examples
SquareZeroQuotient quotient(int n, std::initializer_list<std::pair<int, int>> one_based) {
  Pairs pairs;
  for (auto [a, b] : one_based) pairs.emplace_back(a - 1, b - 1);
  return SquareZeroQuotient(n, pairs);
}

// Counting by scanning all vertex masks.
std::int64_t brute_hilbert(const SquareZeroQuotient& a, int d) {
  std::int64_t count = 0;
  for (VertexSet s = 0; s < (VertexSet{1} << a.n()); ++s) {
    if (vertex_count(s) == d && is_standard(a, s)) ++count;
  }
  return count;
}

SquareZeroQuotient random_quotient(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  SquareZeroQuotient a(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (edge(rng)) a.kill(x, y);
    }
  }
  return a;
}

}  // namespace

TEST(Hilbert, Examples) {
  const auto two_parts = quotient(4, {{1, 2}, {3, 4}});
  EXPECT_EQ(hilbert(two_parts, 2), 4);
  EXPECT_EQ(hilbert(two_parts, 2), turan_count(4, 2, 2));
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(hilbert(SquareZeroQuotient(6), d), binomial(6, d));
  EXPECT_EQ(hilbert(quotient(3, {{1, 2}}), 2), 2);
  EXPECT_EQ(hilbert(two_parts, 0), 1);
  EXPECT_EQ(hilbert(two_parts, 1), 4);
}

TEST(Hilbert, MatchesMaskScan) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_quotient(rng, 2 + static_cast<int>(rng() % 7), 0.4);
    for (int d = 0; d <= a.n(); ++d) EXPECT_EQ(hilbert(a, d), brute_hilbert(a, d));
  }
}

TEST(TopVanishing, Examples) {
  for (int q = 2; q <= 4; ++q) {
    const auto balanced = SquareZeroQuotient::balanced_partite(q + 2, q);
    EXPECT_TRUE(top_vanishing(balanced, q));
    EXPECT_FALSE(top_vanishing(balanced, q - 1));
  }
  EXPECT_TRUE(top_vanishing(SquareZeroQuotient(5), 5));
  EXPECT_FALSE(top_vanishing(SquareZeroQuotient(5), 4));
  EXPECT_TRUE(top_vanishing(quotient(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), 1));
}

TEST(TopVanishing, EquivalentToNoStandardSet) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_quotient(rng, 5, 0.5);
    for (int q = 0; q < 5; ++q) EXPECT_EQ(top_vanishing(a, q), brute_hilbert(a, q + 1) == 0);
  }
}

TEST(ParallelClasses, Examples) {
  const auto a = parallel_classes(quotient(3, {{1, 2}}));
  EXPECT_EQ(a.classes, (std::vector<VertexSet>{vs({1, 2}), vs({3})}));
  EXPECT_FALSE(a.cross_zero[0][1]);
  const auto b = parallel_classes(quotient(4, {{1, 2}, {3, 4}, {1, 3}}));
  EXPECT_EQ(b.classes.size(), 4U);
  const auto c = parallel_classes(quotient(3, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(c.classes, (std::vector<VertexSet>{vs({1, 2, 3})}));
}

TEST(ParallelClasses, DefinitionHolds) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_quotient(rng, 6, 0.6);
    const auto p = parallel_classes(a);
    VertexSet covered = 0;
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
      covered |= p.classes[i];
      const auto members = vertices_of(p.classes[i]);
      for (int x : members) {
        for (int y : members) {
          if (x == y) continue;
          EXPECT_TRUE(a.killed(x, y));
          const VertexSet outside = ~(VertexSet{1} << x | VertexSet{1} << y);
          EXPECT_EQ(a.kill_neighbors(x) & outside, a.kill_neighbors(y) & outside);
        }
      }
      for (std::size_t j = 0; j < p.classes.size(); ++j) {
        if (i == j) continue;
        // uniform cross flag, and maximality: two classes never qualify as one
        for (int x : members) {
          for (int y : vertices_of(p.classes[j])) EXPECT_EQ(a.killed(x, y), p.cross_zero[i][j]);
        }
        const int x = members.front();
        const int y = std::countr_zero(p.classes[j]);
        const VertexSet outside = ~(VertexSet{1} << x | VertexSet{1} << y);
        EXPECT_FALSE(a.killed(x, y) && (a.kill_neighbors(x) & outside) == (a.kill_neighbors(y) & outside));
      }
    }
    EXPECT_EQ(covered, (VertexSet{1} << 6) - 1);
  }
}

TEST(Lambda, Examples) {
  const auto a = quotient(4, {{1, 2}, {3, 4}, {1, 3}});
  EXPECT_EQ(lambda(a, 0, 1), 1);
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(lambda(SquareZeroQuotient(5), 2, d), binomial(4, d));
  const auto star = quotient(4, {{1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(lambda(star, 0, 1), 0);
  EXPECT_EQ(lambda(star, 0, 0), 1);
}

TEST(Lambda, ClassConstant) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_quotient(rng, 7, 0.7);
    for (VertexSet c : parallel_classes(a).classes) {
      const auto members = vertices_of(c);
      for (int d = 0; d <= 4; ++d) {
        for (int x : members) EXPECT_EQ(lambda(a, x, d), lambda(a, members.front(), d));
      }
    }
  }
}

TEST(Clone, Example) {
  const auto a = quotient(4, {{1, 2}, {3, 4}, {1, 3}});
  const auto b = clone(a, vs({1}), vs({3}), CloneDirection::kVFromU);
  EXPECT_EQ(b, quotient(4, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(hilbert(b, 2), 3);
  EXPECT_EQ(hilbert(a, 2), 3);
  const auto classes = parallel_classes(b).classes;
  EXPECT_NE(std::find(classes.begin(), classes.end(), vs({1, 2, 3})), classes.end());
}

TEST(Clone, MergesClasses) {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 100) {
    const auto a = random_quotient(rng, 6, 0.5);
    const auto p = parallel_classes(a);
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
      for (std::size_t j = i + 1; j < p.classes.size(); ++j) {
        if (!p.cross_zero[i][j]) continue;
        const auto b = clone(a, p.classes[i], p.classes[j], CloneDirection::kVFromU);
        const auto merged = parallel_classes(b).classes;
        const VertexSet both = p.classes[i] | p.classes[j];
        // U and V end up in one class (possibly with more variables)
        EXPECT_TRUE(std::any_of(merged.begin(), merged.end(), [both](VertexSet c) { return (c & both) == both; }));
        ++done;
      }
    }
  }
}

TEST(Clone, RejectsBadPairs) {
  const auto a = quotient(4, {{1, 2}, {3, 4}, {1, 3}});
  EXPECT_THROW(clone(a, vs({1}), vs({4}), CloneDirection::kVFromU), PreconditionError);
  EXPECT_THROW(clone(a, vs({1}), vs({1}), CloneDirection::kVFromU), PreconditionError);
  EXPECT_THROW(clone(a, vs({1, 2}), vs({3}), CloneDirection::kVFromU), PreconditionError);
}

TEST(Clone, LedgerAndTopVanishing) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_quotient(rng, 3 + static_cast<int>(rng() % 6), 0.6);
    int q = 0;
    while (hilbert(a, q + 1) > 0) ++q;
    const auto p = parallel_classes(a);
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
      for (std::size_t j = i + 1; j < p.classes.size(); ++j) {
        if (!p.cross_zero[i][j]) continue;
        const VertexSet u = p.classes[i];
        const VertexSet v = p.classes[j];
        for (int r = 1; r <= a.n(); ++r) {
          const auto b = clone(a, u, v, CloneDirection::kVFromU);
          const std::int64_t lu = lambda(a, std::countr_zero(u), r - 1);
          const std::int64_t lv = lambda(a, std::countr_zero(v), r - 1);
          EXPECT_EQ(hilbert(b, r) - hilbert(a, r), vertex_count(v) * (lu - lv));
          EXPECT_TRUE(top_vanishing(b, q));
        }
      }
    }
  }
}

TEST(Symmetrize, AlreadyPartite) {
  const auto a = SquareZeroQuotient::balanced_partite(7, 3);
  const auto result = symmetrize(a, 3, 2);
  EXPECT_TRUE(result.trace.empty());
  EXPECT_EQ(result.terminal, a);
}

TEST(Symmetrize, WorkedExample) {
  const auto a = quotient(4, {{1, 2}, {3, 4}, {1, 3}});
  const auto result = symmetrize(a, 2, 2);
  EXPECT_LE(result.trace.size(), 3U);
  EXPECT_LE(result.classes.size(), 2U);
  EXPECT_GE(hilbert(result.terminal, 2), 3);
  // first pair (1),(2): lambda_1(1) = 1 < lambda_2(1) = 2, so U <- V
  ASSERT_FALSE(result.trace.empty());
  EXPECT_EQ(result.trace[0].u, vs({1}));
  EXPECT_EQ(result.trace[0].v, vs({2}));
  EXPECT_EQ(result.trace[0].direction, CloneDirection::kUFromV);
  EXPECT_EQ(result.terminal, quotient(4, {{1, 2}, {3, 4}}));
}

TEST(Symmetrize, TerminalStructure) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_quotient(rng, 3 + static_cast<int>(rng() % 6), 0.5);
    int q = 0;
    while (hilbert(a, q + 1) > 0) ++q;
    const int r = 1 + static_cast<int>(rng() % a.n());
    const auto result = symmetrize(a, q, r);
    EXPECT_LT(static_cast<int>(result.trace.size()), a.n());
    EXPECT_TRUE(top_vanishing(result.terminal, q));
    EXPECT_GE(hilbert(result.terminal, r), hilbert(a, r));
    EXPECT_LE(hilbert(result.terminal, r), turan_count(a.n(), q, r));
    EXPECT_LE(static_cast<int>(result.classes.size()), q);
    std::vector<std::int64_t> sizes;
    for (VertexSet c : result.classes) sizes.push_back(vertex_count(c));
    EXPECT_EQ(hilbert(result.terminal, r), elem_sym_by_subsets(sizes, r));
    for (int x = 0; x < a.n(); ++x) {
      for (int y = x + 1; y < a.n(); ++y) {
        const bool same = std::any_of(result.classes.begin(), result.classes.end(),
                                      [&](VertexSet c) { return ((c >> x) & 1U) && ((c >> y) & 1U); });
        EXPECT_EQ(result.terminal.killed(x, y), same);
      }
    }
  }
}

TEST(Symmetrize, RequiresTopVanishing) {
  EXPECT_THROW(symmetrize(SquareZeroQuotient(4), 2, 2), PreconditionError);
}

TEST(Smoothing, Examples) {
  const std::vector<std::int64_t> a{3, 1};
  const auto s1 = smoothing_step(a, 2);
  EXPECT_EQ(s1.values, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(s1.delta, 1);
  const std::vector<std::int64_t> b{2, 2};
  const auto s2 = smoothing_step(b, 2);
  EXPECT_FALSE(s2.changed);
  EXPECT_EQ(s2.delta, 0);
  const std::vector<std::int64_t> c{4, 1, 1};
  const auto s3 = smoothing_step(c, 3);
  EXPECT_EQ(s3.values, (std::vector<std::int64_t>{3, 2, 1}));
  EXPECT_EQ(s3.delta, 2);
  EXPECT_EQ(elem_sym_by_subsets(s3.values, 3) - elem_sym_by_subsets(c, 3), 2);
}

TEST(Smoothing, IteratesToTuran) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    const int q = 2 + static_cast<int>(rng() % 4);
    std::vector<std::int64_t> v(q);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 7);
    const int n = static_cast<int>(std::accumulate(v.begin(), v.end(), std::int64_t{0}));
    if (n == 0) continue;
    const int r = 2 + static_cast<int>(rng() % 3);
    for (;;) {
      const auto step = smoothing_step(v, r);
      EXPECT_GE(step.delta, 0);
      if (!step.changed) break;
      EXPECT_EQ(step.delta, elem_sym_by_subsets(step.values, r) - elem_sym_by_subsets(v, r));
      v = step.values;
    }
    EXPECT_LE(*std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end()), 1);
    EXPECT_EQ(elem_sym_by_subsets(v, r), turan_count(n, q, r));
  }
}

TEST(BruteForceHilbertTuran, Examples) {
  const auto a = brute_force_hilbert_turan(4, 2, 2);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.max_found, 4);
  const auto b = brute_force_hilbert_turan(5, 2, 2);
  EXPECT_TRUE(b.ok());
  EXPECT_EQ(b.max_found, 6);
  const auto c = brute_force_hilbert_turan(4, 5, 2);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.bound, 6);
  EXPECT_THROW(brute_force_hilbert_turan(8, 2, 2), ScaleGuardError);
}
