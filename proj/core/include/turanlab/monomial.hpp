#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "turanlab/support.hpp"

namespace turanlab {

enum class IdealForm { kExplicit, kCover, kImplicit };

// Membership test for an implicitly given squarefree monomial ideal.
using MembershipPredicate = std::function<bool(Support)>;

// Optional pruning hook for implicit-form searches. Returns false when no
// member of size `target_size` can contain `chosen` and lie inside
// `chosen | undecided`. Must never reject a state that has such a member.
using PruneHook = std::function<bool(Support chosen, Support undecided, int target_size)>;

struct MonomialLimits {
  std::int64_t max_dual_size = 1'000'000;
  std::int64_t max_nodes = 200'000'000;
  int max_copies = 20'000;
  int max_enumeration_universe = 22;  // brute-force generator enumeration
};

// Squarefree monomial ideal over a universe of at most 64 variables. The
// form tag selects the representation: an antichain of generator supports,
// the cover ideal of a set family (supports meeting every member), or a
// membership predicate.
class SquarefreeIdeal {
 public:
  static SquarefreeIdeal from_generators(int universe_size, std::vector<Support> generators);
  static SquarefreeIdeal cover(int universe_size, std::vector<Support> copies);
  static SquarefreeIdeal implicit(int universe_size, MembershipPredicate predicate, PruneHook hook = {});

  IdealForm form() const { return form_; }
  int universe_size() const { return universe_size_; }
  Support universe() const { return Support::full(universe_size_); }

  // Explicit form: the minimal generators. Cover form: the copies.
  const std::vector<Support>& generators() const { return sets_; }
  const std::vector<Support>& copies() const { return sets_; }
  const PruneHook& prune_hook() const { return hook_; }
  // Non-empty when the ideal was built by intersect().
  const std::vector<SquarefreeIdeal>& members() const { return members_; }

  bool contains(Support m) const;
  bool is_whole_ring() const { return contains(Support{}); }
  bool is_zero() const { return !contains(universe()); }

  // Minimal generators of any form, computed on demand at desk scale.
  std::vector<Support> minimal_generators(const MonomialLimits& limits = {}) const;

 private:
  friend SquarefreeIdeal intersect(int universe_size, std::vector<SquarefreeIdeal> ideals);

  IdealForm form_ = IdealForm::kExplicit;
  int universe_size_ = 0;
  std::vector<Support> sets_;
  MembershipPredicate predicate_;
  PruneHook hook_;
  std::vector<SquarefreeIdeal> members_;
};

// Inclusion-minimal elements, duplicate-free, sorted by ascending bits.
std::vector<Support> minimize_antichain(std::vector<Support> sets);

// Throws ArgumentError when `m` has variables outside the ideal's universe.
bool membership(Support m, const SquarefreeIdeal& ideal);

// Minimal transversals of the generator supports (Alexander dual), by
// incremental refinement one generator at a time. Involutive on antichains.
std::vector<Support> alexander_dual(std::span<const Support> generators, const MonomialLimits& limits = {});

// Intersection of ideals over one universe, held in implicit form. The
// empty intersection is the whole ring.
SquarefreeIdeal intersect(int universe_size, std::vector<SquarefreeIdeal> ideals);

// Cost model for the exact transversal search: cost() must be monotone
// under inclusion and lower_bound() must not exceed the cost of any
// transversal extending `chosen` while avoiding `excluded`.
struct TransversalCost {
  std::function<std::int64_t(Support chosen)> cost;
  std::function<std::int64_t(Support chosen, Support excluded, std::span<const Support> unhit)> lower_bound;
};

struct TransversalResult {
  std::int64_t cost = 0;
  Support witness;
  std::int64_t nodes = 0;
  bool feasible = true;
};

// Branch and bound over transversals: branch on an unhit set of minimum
// remaining size, on its elements in ascending order. Among optimal leaves
// the canonical_less-minimal one is reported.
TransversalResult min_cost_transversal(std::span<const Support> sets, int universe_size, const TransversalCost& model,
                                       const MonomialLimits& limits = {});

struct HittingSet {
  int size = 0;
  Support witness;
};

// Exact minimum hitting set with a disjoint-packing lower bound. An empty
// family gives (0, {}). Throws PreconditionError if some set is empty.
HittingSet min_hitting_set(std::span<const Support> copies, int universe_size, const MonomialLimits& limits = {});

struct InitialDegree {
  std::optional<int> value;  // nullopt: zero ideal (infinite initial degree)
  Support witness;
};

InitialDegree initial_degree(const SquarefreeIdeal& ideal, const MonomialLimits& limits = {});

// A member of `ideal` with exactly `size` variables, found by include-first
// search over the universe with up-closure and prune-hook pruning.
std::optional<Support> find_member_of_size(const SquarefreeIdeal& ideal, int size, const MonomialLimits& limits = {});

}  // namespace turanlab
