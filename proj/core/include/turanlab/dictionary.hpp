#pragma once

#include <cstdint>
#include <optional>

#include "turanlab/hypergraph.hpp"
#include "turanlab/monomial.hpp"
#include "turanlab/squarezero.hpp"

namespace turanlab {

// Edge variables y_E for the r-sets of [n], forbidden copies, and an
// optional target family for the generalized count.
struct CoverInstance {
  int n = 0;
  int r = 0;
  FamilySpec forbidden_spec;
  CopyFamily forbidden;
  std::optional<FamilySpec> target_spec;
  std::optional<CopyFamily> target;
  EdgeUniverse universe;
};

CoverInstance make_cover_instance(int n, const FamilySpec& forbidden);
CoverInstance make_cover_instance(int n, const FamilySpec& target, const FamilySpec& forbidden);

// Cover form: y_M is a member iff M meets every forbidden copy. With no
// forbidden copies this is the whole ring.
SquarefreeIdeal cover_ideal(const CoverInstance& inst);

struct CoverExResult {
  std::int64_t value = 0;  // C(n,r) - alpha
  int alpha = 0;
  Support hitting_witness;
  RGraph witness;          // complement of hitting_witness
  bool witness_free = false;
};

// Turán number from the initial degree of the cover ideal. The witness is
// checked F-free by a direct containment scan.
CoverExResult ex_via_cover(int n, const FamilySpec& forbidden, const MonomialLimits& limits = {});

// Target copies disjoint from M (those whose monomial survives killing M).
std::int64_t quotient_rank(Support m, const CopyFamily& target);

struct AlphaTResult {
  std::int64_t value = 0;  // target copies meeting the witness
  Support witness;
};

// min over covers M of the forbidden copies of #target copies meeting M.
AlphaTResult alpha_t(const CoverInstance& inst, const MonomialLimits& limits = {});

struct GenExResult {
  std::int64_t value = 0;
  std::int64_t target_count = 0;
  AlphaTResult alpha;
  RGraph witness{1, 2};  // complement of alpha.witness
  bool witness_free = false;
};

// ex(n,T,F) = |T-copies| - alpha_T of the cover ideal. Graphs only.
GenExResult gen_ex_via_cover(int n, const FamilySpec& target, const FamilySpec& forbidden,
                             const MonomialLimits& limits = {});

// A_M = k[z_1..z_n]/(z_i^2, z_i z_j : y_ij in M) for M over the edges of K_n.
SquareZeroQuotient vertex_quotient_of_cover(Support m, int n);

}  // namespace turanlab
