#include <gtest/gtest.h>

#include <random>

#include "turanlab/combinatorics.hpp"
#include "turanlab/diagonal.hpp"
#include "turanlab/errors.hpp"

using namespace turanlab;

namespace {

Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

Polynomial vandermonde(int n) {
  Polynomial p = Polynomial::constant(n, 1);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) p *= Polynomial::difference(n, a, b);
  }
  return p;
}

}  // namespace

TEST(BuildPG, Examples) {
  const Polynomial p = build_pG(3, RGraph(3, 3));
  EXPECT_EQ(p, vandermonde(3));
  EXPECT_EQ(poly_degree_info(p).degree, 3);
  EXPECT_EQ(build_pG(3, RGraph::complete(3, 3)), Polynomial::constant(3, 1));
  EXPECT_EQ(poly_degree_info(build_pG(4, RGraph(4, 3))).degree, 12);
}

TEST(BuildPG, DegreeFormulaAndHomogeneity) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const RGraph g = random_partite_3graph(5, 3, rng);
    const DegreeInfo info = poly_degree_info(build_pG(5, g));
    EXPECT_EQ(info.degree, 3 * (binomial(5, 3) - g.edge_count()));
    EXPECT_TRUE(info.homogeneous);
  }
  EXPECT_THROW(build_pG(8, RGraph(8, 3)), ScaleGuardError);
}

TEST(InI, Examples) {
  const Polynomial d3 = x(3, 0) - x(3, 1);
  EXPECT_TRUE(in_I(d3, {3, 3}));
  EXPECT_FALSE(in_I(x(4, 0) - x(4, 1), {4, 3}));
  EXPECT_TRUE(in_I(Polynomial::constant(2, 1), {2, 3}));
}

TEST(InI, ClosedUnderMultiplication) {
  std::mt19937_64 rng(2);
  const Polynomial member = vandermonde(4);
  ASSERT_TRUE(in_I(member, {4, 3}));
  for (int t = 0; t < 10; ++t) {
    Polynomial q(4);
    for (int k = 0; k < 3; ++k) {
      Exponent e{};
      for (int i = 0; i < 4; ++i) e.e[i] = static_cast<std::uint16_t>(rng() % 3);
      q.add_term(e, static_cast<long>(rng() % 7) - 3);
    }
    EXPECT_TRUE(in_I(poly_mul(member, q), {4, 3}));
  }
}

TEST(InDI, Examples) {
  EXPECT_TRUE(in_DI(x(3, 0) - x(3, 1), {3, 3}));
  EXPECT_TRUE(in_DI(vandermonde(4), {4, 3}));
  EXPECT_FALSE(in_DI(x(4, 0) - x(4, 1), {4, 3}));
}

TEST(InDI, DerivativeCanRejectAnIMember) {
  // p = (x1-x2)(x3-x4)(x1-x3) vanishes on every 3-diagonal, but
  // dp/dx1 = (x3-x4)(2x1-x2-x3) survives identifying {1,2,4}.
  const Polynomial d12 = Polynomial::difference(4, 0, 1);
  const Polynomial d34 = Polynomial::difference(4, 2, 3);
  const Polynomial d13 = Polynomial::difference(4, 0, 2);
  const Polynomial p = poly_mul(poly_mul(d12, d34), d13);
  EXPECT_TRUE(in_I(p, {4, 3}));
  EXPECT_FALSE(in_DI(p, {4, 3}));
}

TEST(InDI, VacuousRange) {
  EXPECT_TRUE(in_DI(x(2, 0), {2, 3}));
  EXPECT_TRUE(in_I(x(3, 2), {3, 4}));
}

TEST(BuildF, Examples) {
  EXPECT_EQ(build_F({3, 3}), x(3, 0) - x(3, 1));
  EXPECT_EQ(poly_degree_info(build_F({4, 3})).degree, 6);
  EXPECT_EQ(build_F({4, 4}), poly_mul(x(4, 0) - x(4, 1), x(4, 2) - x(4, 3)));
  EXPECT_THROW(build_F({3, 4}), ArgumentError);
}

TEST(MinGeneratorDegree, Examples) {
  EXPECT_EQ(min_generator_degree({4, 3}), 12);
  EXPECT_EQ(min_generator_degree({3, 3}), 3);
  EXPECT_EQ(min_generator_degree({4, 4}), 6);
}

TEST(VerifyCounterexample, Examples) {
  const auto a = verify_counterexample({3, 3});
  EXPECT_EQ(a.f_degree, 1);
  EXPECT_EQ(a.generator_degree_bound, 3);
  EXPECT_EQ(a.verdict(), "counterexample confirmed");
  const auto b = verify_counterexample({4, 3});
  EXPECT_EQ(b.f_degree, 6);
  EXPECT_EQ(b.generator_degree_bound, 12);
  EXPECT_TRUE(b.confirmed());
  const auto c = verify_counterexample({5, 4});
  EXPECT_EQ(c.f_degree, 4);
  EXPECT_EQ(c.generator_degree_bound, 18);
  EXPECT_TRUE(c.confirmed());
}

TEST(VerifyCounterexample, AllSmallParameters) {
  for (int ell = 3; ell <= 5; ++ell) {
    for (int n = ell; n <= std::min(ell + 2, 7); ++n) {
      const auto report = verify_counterexample({n, ell});
      EXPECT_TRUE(report.confirmed()) << "ell=" << ell << " n=" << n;
      EXPECT_LT(report.f_degree, report.generator_degree_bound);
    }
  }
}

TEST(WitnessPartition, PigeonholeForEveryEllSet) {
  for (int ell = 4; ell <= 6; ++ell) {
    for (int n = ell; n <= 7; ++n) {
      const auto labels = witness_partition({n, ell});
      for_each_k_subset(n, ell, [&](VertexSet s) {
        const auto v = vertices_of(s);
        bool repeated = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t j = i + 1; j < v.size(); ++j) repeated = repeated || labels[v[i]] == labels[v[j]];
        }
        EXPECT_TRUE(repeated);
        return true;
      });
    }
  }
}

TEST(PartiteLemma, Examples) {
  EXPECT_TRUE(in_DI(build_pG(4, RGraph(4, 3)), {4, 3}));
  // all transversal triples of parts {1,2},{3},{4}
  const RGraph g = RGraph::from_lists(4, 3, {{0, 2, 3}, {1, 2, 3}});
  EXPECT_TRUE(in_DI(build_pG(4, g), {4, 4}));
  EXPECT_TRUE(in_DI(build_pG(5, RGraph(5, 3)), {5, 4}));
}

TEST(PartiteLemma, RandomTrials) {
  const LemmaReport report = verify_lemma_partite_generators(4, 3, 5, 42);
  EXPECT_TRUE(report.all_in_di);
  EXPECT_EQ(report.trials.size(), 5U);
}

TEST(PartiteLemma, NonPartiteGraphCanFail) {
  // the complete 3-graph on [4] is not 2-partite; p_G = 1 is not in I(4,3)
  EXPECT_FALSE(in_DI(build_pG(4, RGraph::complete(4, 3)), {4, 3}));
}
