#include "turanlab/codegree_star.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "turanlab/combinatorics.hpp"
#include "turanlab/errors.hpp"

namespace turanlab {
namespace {

constexpr int kExhaustiveCollapseUniverse = 20;
constexpr int kHilbertBoundMaxN = 6;

void check_pair(const CodegreeStarParams& params, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= params.n || b >= params.n) {
    throw ArgumentError("u_star: need distinct vertices in [n]");
  }
}

// H(n, q, r): the largest hilbert(A, r) with A_{q+1} = 0, by exhaustion.
std::int64_t max_hilbert_exhaustive(int n, int q, int r) {
  return brute_force_hilbert_turan(n, q, r).max_found;
}

// K_ell^(r)-freeness straight from the family definition: no edge subset of
// at most C(ell,2) edges is a member.
bool free_by_member_scan(const EdgeUniverse& universe, Support g, int ell) {
  const std::int64_t max_edges = binomial(ell, 2);
  const std::uint64_t bits = g.bits();
  for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
    if (sub != 0 && std::popcount(sub) <= max_edges &&
        is_member_core_family(RGraph::from_support(universe, Support(sub)), ell)) {
      return false;
    }
    if (sub == 0) break;
  }
  return true;
}

}  // namespace

EdgeUniverse CodegreeStarParams::universe() const {
  validate();
  return EdgeUniverse(n, r);
}

void CodegreeStarParams::validate() const {
  if (ell < 2 || r < 2) throw ArgumentError("codegree star: need ell >= 2 and r >= 2");
  if (n < 1 || n > kMaxVertices) throw ArgumentError("codegree star: n must lie in [1, 32]");
  if (binomial(n, r) > kMaxUniverse) throw ScaleGuardError("codegree star: more than 64 edge variables");
}

Support u_star(const CodegreeStarParams& params, int a, int b) {
  check_pair(params, a, b);
  return params.universe().superset_of((VertexSet{1} << a) | (VertexSet{1} << b));
}

Support missing_edge_monomial(const RGraph& g) {
  const EdgeUniverse universe(g.n(), g.r());
  return universe.all().minus(g.to_support(universe));
}

std::vector<VertexSet> starred_pairs(Support m, const CodegreeStarParams& params) {
  const EdgeUniverse universe = params.universe();
  // a pair is starred iff no r-set through it is missing from m
  std::vector<VertexSet> adjacency(static_cast<std::size_t>(params.n), 0);
  for (int a = 0; a < params.n; ++a) {
    for (int b = a + 1; b < params.n; ++b) {
      adjacency[a] |= VertexSet{1} << b;
      adjacency[b] |= VertexSet{1} << a;
    }
  }
  if (params.n < params.r) return adjacency;  // every u_ab is 1
  const Support absent = universe.all().minus(m);
  for (int e : absent.elements()) {
    const VertexSet edge = universe.edge(e);
    for (VertexSet rest = edge; rest != 0; rest &= rest - 1) {
      adjacency[std::countr_zero(rest)] &= ~edge;
    }
  }
  return adjacency;
}

SquareZeroQuotient vertex_quotient(Support m, const CodegreeStarParams& params) {
  const auto adjacency = starred_pairs(m, params);
  SquareZeroQuotient out(params.n);
  for (int a = 0; a < params.n; ++a) {
    for (int b : vertices_of(adjacency[a])) {
      if (a < b) out.kill(a, b);
    }
  }
  return out;
}

bool membership_j(Support m, const CodegreeStarParams& params) {
  params.validate();
  if (params.n < params.ell) return true;
  const auto adjacency = starred_pairs(m, params);
  return for_each_k_subset(params.n, params.ell, [&adjacency](VertexSet core) {
    for (VertexSet rest = core; rest != 0; rest &= rest - 1) {
      if (adjacency[std::countr_zero(rest)] & core) return true;
    }
    return false;
  });
}

SquarefreeIdeal codegree_star_ideal(const CodegreeStarParams& params, const CodegreeStarOptions& options) {
  const int size = params.universe().size();
  MembershipPredicate predicate = [params](Support m) { return membership_j(m, params); };
  if (!options.hilbert_bound || params.n > kHilbertBoundMaxN || params.n < params.ell) {
    return SquarefreeIdeal::implicit(size, std::move(predicate));
  }
  // Every y_E missing from m is a standard r-set of A_m, and A_m has no
  // standard ell-set when m is a member.
  const std::int64_t ceiling = max_hilbert_exhaustive(params.n, params.ell - 1, params.r);
  // So size - |m| <= hilbert(A_m, r) <= ceiling for every member m.
  PruneHook hook = [size, ceiling](Support, Support, int target_size) { return size - target_size <= ceiling; };
  return SquarefreeIdeal::implicit(size, std::move(predicate), std::move(hook));
}

CollapseReport verify_collapse(const CodegreeStarParams& params, std::int64_t samples, std::uint64_t seed) {
  const EdgeUniverse universe = params.universe();
  const CopyFamily copies = enumerate_forbidden_copies(CoreFamily{params.ell, params.r}, params.n);
  const SquarefreeIdeal cover = SquarefreeIdeal::cover(universe.size(), copies.copies);
  const ContainmentOracle oracle(CoreFamily{params.ell, params.r}, params.n);

  CollapseReport report;
  report.exhaustive = universe.size() <= kExhaustiveCollapseUniverse;
  const auto check = [&](Support m) {
    ++report.checked;
    const bool in_j = membership_j(m, params);
    if (in_j != cover.contains(m)) ++report.cover_mismatches;
    const Support g = universe.all().minus(m);
    const bool graph_free = report.exhaustive && universe.size() <= 12 ? free_by_member_scan(universe, g, params.ell)
                                                                       : !oracle.contains(g);
    if (in_j != graph_free) ++report.freeness_mismatches;
  };
  if (report.exhaustive) {
    const std::uint64_t limit = std::uint64_t{1} << universe.size();
    for (std::uint64_t bits = 0; bits < limit; ++bits) check(Support(bits));
  } else {
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = universe.all().bits();
    for (std::int64_t i = 0; i < samples; ++i) check(Support(rng() & mask));
  }
  return report;
}

Support m0_witness(const CodegreeStarParams& params) {
  const EdgeUniverse universe = params.universe();
  const auto labels = balanced_part_labels(params.n, params.ell - 1);
  Support out;
  for (int e = 0; e < universe.size(); ++e) {
    VertexSet seen_parts = 0;
    bool repeated = false;
    for (int v : vertices_of(universe.edge(e))) {
      const VertexSet part = VertexSet{1} << labels[v];
      repeated = repeated || (seen_parts & part);
      seen_parts |= part;
    }
    if (repeated) out.insert(e);
  }
  return out;
}

AlphaJResult alpha_j(const CodegreeStarParams& params, const CodegreeStarOptions& options) {
  const EdgeUniverse universe = params.universe();
  AlphaJResult out;
  out.expected = static_cast<int>(universe.size() - turan_count(params.n, params.ell - 1, params.r));
  out.m0 = m0_witness(params);
  out.m0_member = membership_j(out.m0, params);

  const SquarefreeIdeal ideal = codegree_star_ideal(params, options);
  // Members are closed upward, so no member of size expected-1 rules out
  // every smaller size too.
  if (out.expected == 0) {
    out.below_expected_empty = true;
  } else {
    out.below_expected_empty = !find_member_of_size(ideal, out.expected - 1, options.limits).has_value();
  }
  if (!out.below_expected_empty) {
    const InitialDegree direct = initial_degree(ideal, options.limits);
    out.value = direct.value.value_or(-1);
    out.witness = direct.witness;
    return out;
  }
  for (int k = out.expected; k <= universe.size(); ++k) {
    if (auto m = find_member_of_size(ideal, k, options.limits)) {
      out.value = k;
      out.witness = *m;
      return out;
    }
  }
  out.value = -1;  // zero ideal; cannot happen for ell >= 2
  return out;
}

MubayiResult mubayi_ex(const CodegreeStarParams& params, bool run_oracle, int threads,
                       const CodegreeStarOptions& options) {
  const EdgeUniverse universe = params.universe();
  MubayiResult out;
  out.value = turan_count(params.n, params.ell - 1, params.r);
  out.via_alpha = universe.size() - alpha_j(params, options).value;
  if (run_oracle) {
    SearchOptions search;
    search.threads = threads;
    out.oracle = brute_force_ex(params.n, CoreFamily{params.ell, params.r}, search).value;
  }
  return out;
}

}  // namespace turanlab
