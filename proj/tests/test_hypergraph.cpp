#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "turanlab/combinatorics.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/hypergraph.hpp"

using namespace turanlab;

namespace {

VertexSet vs(std::initializer_list<int> one_based) {
  VertexSet s = 0;
  for (int v : one_based) s |= VertexSet{1} << (v - 1);
  return s;
}

// Triangle-freeness by scanning all vertex triples; independent of the
// embedding oracle.
bool triangle_free(const EdgeUniverse& u, Support g) {
  bool free = true;
  for_each_k_subset(u.n(), 3, [&](VertexSet t) {
    const auto v = vertices_of(t);
    const VertexSet pairs[3] = {vs({v[0] + 1, v[1] + 1}), vs({v[0] + 1, v[2] + 1}), vs({v[1] + 1, v[2] + 1})};
    free = !std::all_of(pairs, pairs + 3, [&](VertexSet p) { return g.contains(u.rank(p)); });
    return free;
  });
  return free;
}

}  // namespace

TEST(EdgeUniverse, ColexRankIsBijective) {
  const EdgeUniverse u(6, 3);
  ASSERT_EQ(u.size(), 20);
  for (int i = 0; i < u.size(); ++i) EXPECT_EQ(u.rank(u.edge(i)), i);
  EXPECT_EQ(u.edge(0), vs({1, 2, 3}));
  EXPECT_EQ(u.edge(1), vs({1, 2, 4}));
  EXPECT_THROW(u.rank(vs({1, 2})), ArgumentError);
}

TEST(RGraph, ValidatesEdges) {
  EXPECT_THROW(RGraph::from_lists(4, 3, {{0, 1}}), ArgumentError);
  EXPECT_THROW(RGraph::from_lists(4, 2, {{0, 4}}), ArgumentError);
  EXPECT_THROW(RGraph::from_lists(4, 2, {{0, 1}, {1, 0}}), ArgumentError);
  const RGraph g = RGraph::from_lists(4, 2, {{2, 3}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.has_edge(vs({1, 2})));
  EXPECT_EQ(g.complement().edge_count(), 4);
}

TEST(TuranConstruct, Examples) {
  const RGraph k22 = turan_construct(4, 2, 2);
  EXPECT_EQ(k22.edge_count(), 4);
  EXPECT_FALSE(k22.has_edge(vs({1, 2})));
  EXPECT_FALSE(k22.has_edge(vs({3, 4})));
  EXPECT_TRUE(k22.has_edge(vs({1, 3})));
  EXPECT_EQ(turan_construct(5, 2, 3).edge_count(), 0);
  EXPECT_EQ(turan_construct(5, 7, 3).edge_count(), 10);
}

TEST(TuranCount, ExamplesAndInvariants) {
  EXPECT_EQ(turan_count(6, 3, 3), 8);
  EXPECT_EQ(turan_count(4, 2, 2), 4);
  EXPECT_EQ(turan_count(4, 3, 3), 2);
  EXPECT_EQ(turan_count(5, 3, 3), 4);
  for (int n = 1; n <= 12; ++n) {
    for (int q = 1; q <= 6; ++q) {
      for (int r = 1; r <= 4; ++r) {
        EXPECT_EQ(turan_construct(n, q, r).edge_count(), turan_count(n, q, r)) << n << " " << q << " " << r;
        if (q >= n) EXPECT_EQ(turan_count(n, q, r), binomial(n, r));
        if (r > q) EXPECT_EQ(turan_count(n, q, r), 0);
      }
    }
  }
}

TEST(Codegree, Examples) {
  const RGraph g = RGraph::from_lists(4, 3, {{0, 1, 2}, {0, 1, 3}});
  EXPECT_EQ(codegree(g, 0, 1), 2);
  EXPECT_EQ(codegree(g, 2, 3), 0);
  const RGraph t = turan_construct(6, 3, 3);
  const auto labels = balanced_part_labels(6, 3);
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      if (labels[a] == labels[b]) EXPECT_EQ(codegree(t, a, b), 0);
    }
  }
}

TEST(CoreFamily, MembershipExamples) {
  const RGraph one = RGraph::from_lists(3, 3, {{0, 1, 2}});
  EXPECT_TRUE(is_member_core_family(one, 3));
  EXPECT_FALSE(is_member_core_family(RGraph::from_lists(4, 3, {{0, 1, 2}}), 4));
  EXPECT_FALSE(is_member_core_family(RGraph(5, 3), 3));
  // too many edges even though a core exists
  EXPECT_FALSE(is_member_core_family(RGraph::complete(5, 3), 3));
  // pair 34 uncovered, then covered
  EXPECT_FALSE(is_member_core_family(RGraph::from_lists(4, 3, {{0, 1, 2}, {0, 1, 3}}), 4));
  EXPECT_TRUE(is_member_core_family(RGraph::from_lists(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}), 4));
}

TEST(TuranConstruct, FreeOfNextCoreFamilyAtTinyN) {
  for (int q = 2; q <= 3; ++q) {
    for (int n = q + 1; n <= 6; ++n) {
      const RGraph t = turan_construct(n, q, 3);
      const EdgeUniverse u(n, 3);
      const Support g = t.to_support(u);
      // every subgraph: scan submasks
      for (std::uint64_t sub = g.bits();; sub = (sub - 1) & g.bits()) {
        if (sub != 0) EXPECT_FALSE(is_member_core_family(RGraph::from_support(u, Support(sub)), q + 1));
        if (sub == 0) break;
      }
    }
  }
}

TEST(ForbiddenCopies, Examples) {
  EXPECT_EQ(enumerate_forbidden_copies(complete_graph_pattern(3), 4).copies.size(), 4U);
  const CopyFamily singles = enumerate_forbidden_copies(CoreFamily{3, 3}, 4);
  ASSERT_EQ(singles.copies.size(), 4U);
  for (Support c : singles.copies) EXPECT_EQ(c.size(), 1);
  EXPECT_EQ(enumerate_forbidden_copies(complete_graph_pattern(2), 3).copies.size(), 3U);
  EXPECT_TRUE(enumerate_forbidden_copies(complete_graph_pattern(5), 4).copies.empty());
  EXPECT_EQ(enumerate_forbidden_copies(path_pattern(3), 4).copies.size(), 12U);
  EXPECT_EQ(enumerate_forbidden_copies(cycle_pattern(4), 4).copies.size(), 3U);
}

TEST(ForbiddenCopies, CoreCopiesAreMinimalMembers) {
  for (int n = 4; n <= 5; ++n) {
    const EdgeUniverse u(n, 3);
    const CopyFamily copies = enumerate_forbidden_copies(CoreFamily{4, 3}, n);
    for (Support c : copies.copies) {
      EXPECT_TRUE(is_member_core_family(RGraph::from_support(u, c), 4));
      for (int e : c.elements()) {
        EXPECT_FALSE(is_member_core_family(RGraph::from_support(u, Support(c).erase(e)), 4));
      }
    }
    // every member of size <= 6 contains some enumerated copy
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << u.size()); ++bits) {
      if (std::popcount(bits) > 6) continue;
      const Support s(bits);
      const bool member = is_member_core_family(RGraph::from_support(u, s), 4);
      const bool covers =
          std::any_of(copies.copies.begin(), copies.copies.end(), [s](Support c) { return c.subset_of(s); });
      if (member) EXPECT_TRUE(covers);
    }
  }
}

TEST(ForbiddenCopies, RelabelingPermutesCopies) {
  const int n = 5;
  const EdgeUniverse u(n, 2);
  const CopyFamily copies = enumerate_forbidden_copies(path_pattern(3), n);
  const int perm[5] = {3, 0, 4, 1, 2};
  std::vector<std::uint64_t> original;
  std::vector<std::uint64_t> relabeled;
  for (Support c : copies.copies) {
    original.push_back(c.bits());
    Support image;
    for (int e : c.elements()) {
      const auto v = vertices_of(u.edge(e));
      image.insert(u.rank((VertexSet{1} << perm[v[0]]) | (VertexSet{1} << perm[v[1]])));
    }
    relabeled.push_back(image.bits());
  }
  std::sort(original.begin(), original.end());
  std::sort(relabeled.begin(), relabeled.end());
  EXPECT_EQ(original, relabeled);
}

TEST(CountCopies, Examples) {
  const CopyFamily triangles4 = enumerate_forbidden_copies(complete_graph_pattern(3), 4);
  EXPECT_EQ(count_copies(RGraph::complete(4, 2), triangles4), 4);
  EXPECT_EQ(count_copies(turan_construct(4, 2, 2), triangles4), 0);
  const CopyFamily triangles6 = enumerate_forbidden_copies(complete_graph_pattern(3), 6);
  EXPECT_EQ(count_copies(turan_construct(6, 3, 2), triangles6), 8);
}

TEST(BruteForceEx, Examples) {
  EXPECT_EQ(brute_force_ex(4, complete_graph_pattern(3)).value, 4);
  EXPECT_EQ(brute_force_ex(5, complete_graph_pattern(3)).value, 6);
  EXPECT_EQ(brute_force_ex(4, CoreFamily{3, 3}).value, 0);
  EXPECT_EQ(brute_force_ex(5, CoreFamily{4, 2}).value, 8);
}

TEST(BruteForceEx, MatchesNaiveTriangleScan) {
  for (int n = 3; n <= 5; ++n) {
    const EdgeUniverse u(n, 2);
    int best = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << u.size()); ++bits) {
      if (triangle_free(u, Support(bits))) best = std::max(best, std::popcount(bits));
    }
    const ExtremalResult r = brute_force_ex(n, complete_graph_pattern(3));
    EXPECT_EQ(r.value, best);
    EXPECT_TRUE(triangle_free(u, r.witness.to_support(u)));
    EXPECT_EQ(r.witness.edge_count(), best);
  }
}

TEST(BruteForceEx, WitnessIsThreadInvariant) {
  SearchOptions one;
  SearchOptions four;
  four.threads = 4;
  for (int n = 4; n <= 6; ++n) {
    const auto a = brute_force_ex(n, complete_graph_pattern(3), one);
    const auto b = brute_force_ex(n, complete_graph_pattern(3), four);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
  }
  const auto a = brute_force_gen_ex(6, complete_graph_pattern(3), complete_graph_pattern(4), one);
  const auto b = brute_force_gen_ex(6, complete_graph_pattern(3), complete_graph_pattern(4), four);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(BruteForceGenEx, Examples) {
  EXPECT_EQ(brute_force_gen_ex(4, complete_graph_pattern(3), complete_graph_pattern(4)).value, 2);
  EXPECT_EQ(brute_force_gen_ex(5, complete_graph_pattern(3), complete_graph_pattern(3)).value, 0);
  EXPECT_EQ(brute_force_gen_ex(6, complete_graph_pattern(3), complete_graph_pattern(4)).value, 8);
  EXPECT_THROW(brute_force_gen_ex(5, CoreFamily{3, 2}, complete_graph_pattern(4)), ArgumentError);
}

TEST(BruteForce, ScaleGuard) {
  EXPECT_THROW(brute_force_ex(10, complete_graph_pattern(3)), ScaleGuardError);
}

TEST(HypergraphText, ParseAndFormat) {
  const RGraph g = parse_hypergraph_text("# a path\n3 2\n1 2  # first edge\n\n2 3\n");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.has_edge(vs({1, 2})));
  EXPECT_EQ(parse_hypergraph_text(format_hypergraph(g)), g);
  EXPECT_THROW(parse_hypergraph_text("3 2\n1 4\n"), ArgumentError);
  EXPECT_THROW(parse_hypergraph_text("3 2\n1 2 3\n"), ArgumentError);
  EXPECT_THROW(parse_hypergraph_text("3 x\n"), ArgumentError);
  EXPECT_THROW(parse_hypergraph_text(""), ArgumentError);
}
