#include "turanlab/dictionary.hpp"

#include <algorithm>

#include "turanlab/combinatorics.hpp"
#include "turanlab/errors.hpp"

namespace turanlab {
namespace {

EdgeUniverse checked_universe(int n, int r, const char* where) {
  EdgeUniverse universe(n, r);
  if (!universe.fits_support()) {
    throw ScaleGuardError(std::string(where) + ": more than 64 edge variables");
  }
  return universe;
}

}  // namespace

CoverInstance make_cover_instance(int n, const FamilySpec& forbidden) {
  const int r = family_uniformity(forbidden);
  return CoverInstance{n,  r, forbidden, enumerate_forbidden_copies(forbidden, n), std::nullopt, std::nullopt,
                       checked_universe(n, r, "cover instance")};
}

CoverInstance make_cover_instance(int n, const FamilySpec& target, const FamilySpec& forbidden) {
  if (family_uniformity(target) != family_uniformity(forbidden)) {
    throw ArgumentError("cover instance: target and forbidden uniformities differ");
  }
  if (family_uniformity(target) != 2) {
    throw ArgumentError("cover instance: generalized counts are defined for graphs (r = 2)");
  }
  if (std::holds_alternative<CoreFamily>(target)) {
    throw ArgumentError("cover instance: the target must be an explicit pattern");
  }
  CoverInstance inst = make_cover_instance(n, forbidden);
  inst.target_spec = target;
  inst.target = enumerate_forbidden_copies(target, n);
  return inst;
}

SquarefreeIdeal cover_ideal(const CoverInstance& inst) {
  return SquarefreeIdeal::cover(inst.universe.size(), inst.forbidden.copies);
}

CoverExResult ex_via_cover(int n, const FamilySpec& forbidden, const MonomialLimits& limits) {
  const CoverInstance inst = make_cover_instance(n, forbidden);
  const InitialDegree alpha = initial_degree(cover_ideal(inst), limits);
  if (!alpha.value) throw PreconditionError("ex_via_cover: a forbidden copy has no edges");

  CoverExResult out{binomial(n, inst.r) - *alpha.value, *alpha.value, alpha.witness,
                    RGraph::from_support(inst.universe, inst.universe.all().minus(alpha.witness)), false};
  const ContainmentOracle oracle(forbidden, n);
  out.witness_free = !oracle.contains(out.witness.to_support(inst.universe));
  return out;
}

std::int64_t quotient_rank(Support m, const CopyFamily& target) {
  return std::count_if(target.copies.begin(), target.copies.end(), [m](Support c) { return !c.intersects(m); });
}

AlphaTResult alpha_t(const CoverInstance& inst, const MonomialLimits& limits) {
  if (!inst.target) throw ArgumentError("alpha_t: the instance has no target family");
  const CopyFamily& target = *inst.target;
  const auto killed = [&target](Support m) {
    return static_cast<std::int64_t>(target.copies.size()) - quotient_rank(m, target);
  };
  TransversalCost model;
  model.cost = killed;
  // killed copies only grow as M grows
  model.lower_bound = [&killed](Support chosen, Support, std::span<const Support>) { return killed(chosen); };
  const TransversalResult result =
      min_cost_transversal(inst.forbidden.copies, inst.universe.size(), model, limits);
  if (!result.feasible) throw PreconditionError("alpha_t: a forbidden copy has no edges");
  return {result.cost, result.witness};
}

GenExResult gen_ex_via_cover(int n, const FamilySpec& target, const FamilySpec& forbidden,
                             const MonomialLimits& limits) {
  const CoverInstance inst = make_cover_instance(n, target, forbidden);
  GenExResult out;
  out.target_count = static_cast<std::int64_t>(inst.target->copies.size());
  out.alpha = alpha_t(inst, limits);
  out.value = out.target_count - out.alpha.value;
  out.witness = RGraph::from_support(inst.universe, inst.universe.all().minus(out.alpha.witness));
  const ContainmentOracle oracle(forbidden, n);
  out.witness_free = !oracle.contains(out.witness.to_support(inst.universe));
  return out;
}

SquareZeroQuotient vertex_quotient_of_cover(Support m, int n) {
  const EdgeUniverse universe = checked_universe(n, 2, "vertex_quotient_of_cover");
  if (!m.subset_of(universe.all())) throw ArgumentError("vertex_quotient_of_cover: support outside the edge universe");
  SquareZeroQuotient out(n);
  for (int e : m.elements()) {
    const auto v = vertices_of(universe.edge(e));
    out.kill(v[0], v[1]);
  }
  return out;
}

}  // namespace turanlab
