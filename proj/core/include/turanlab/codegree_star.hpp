#pragma once

#include <cstdint>
#include <optional>

#include "turanlab/hypergraph.hpp"
#include "turanlab/monomial.hpp"
#include "turanlab/squarezero.hpp"

namespace turanlab {

struct CodegreeStarParams {
  int n = 0;
  int ell = 0;
  int r = 0;

  EdgeUniverse universe() const;  // r-sets of [n]; at most 64 of them
  void validate() const;          // ell, r >= 2 and the universe fits
};

// u_ab: the r-sets containing {a, b}. 0-based vertices.
Support u_star(const CodegreeStarParams& params, int a, int b);

// m_G: the non-edges of G.
Support missing_edge_monomial(const RGraph& g);

// Pairs {a, b} with u_ab | m, as adjacency masks (the kill graph of A_m).
std::vector<VertexSet> starred_pairs(Support m, const CodegreeStarParams& params);

// A_m = k[x_1..x_n]/(x_i^2, x_a x_b : u_ab | m).
SquareZeroQuotient vertex_quotient(Support m, const CodegreeStarParams& params);

// Every ell-subset of [n] contains a pair whose u_ab divides m.
bool membership_j(Support m, const CodegreeStarParams& params);

struct CodegreeStarOptions {
  // Prune by |m| >= C(n,r) - max hilbert(A, r) over quotients with
  // A_ell = 0, the maximum taken by exhaustion over kill graphs (n <= 6).
  bool hilbert_bound = true;
  MonomialLimits limits;
};

// J as an implicit ideal carrying the A_m prune.
SquarefreeIdeal codegree_star_ideal(const CodegreeStarParams& params, const CodegreeStarOptions& options = {});

struct CollapseReport {
  bool exhaustive = false;
  std::int64_t checked = 0;
  std::int64_t cover_mismatches = 0;    // membership_j vs cover of enumerated copies
  std::int64_t freeness_mismatches = 0;  // m_G in J vs G free of the family
  bool ok() const { return checked > 0 && cover_mismatches == 0 && freeness_mismatches == 0; }
};

// Exhaustive over all supports when C(n,r) <= 20, else `samples` random
// supports from `seed`.
CollapseReport verify_collapse(const CodegreeStarParams& params, std::int64_t samples = 20000,
                               std::uint64_t seed = 1);

// Product of the r-sets with two vertices in one part of the balanced
// (ell-1)-partition.
Support m0_witness(const CodegreeStarParams& params);

struct AlphaJResult {
  int value = 0;
  int expected = 0;  // C(n,r) - t_r(n, ell-1)
  Support witness;   // canonical member of size `value`
  Support m0;
  bool m0_member = false;
  bool below_expected_empty = false;  // no member of size expected - 1
  bool ok() const { return value == expected && m0_member && m0.size() == value && below_expected_empty; }
};

AlphaJResult alpha_j(const CodegreeStarParams& params, const CodegreeStarOptions& options = {});

struct MubayiResult {
  std::int64_t value = 0;   // t_r(n, ell-1)
  std::int64_t via_alpha = 0;  // C(n,r) - alpha_J
  std::optional<std::int64_t> oracle;  // brute_force_ex(n, K_ell^(r))
  bool ok() const { return value == via_alpha && (!oracle || *oracle == value); }
};

MubayiResult mubayi_ex(const CodegreeStarParams& params, bool run_oracle = true, int threads = 1,
                       const CodegreeStarOptions& options = {});

}  // namespace turanlab
