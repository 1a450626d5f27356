#include "turanlab/monomial.hpp"

#include <algorithm>

#include "turanlab/errors.hpp"

namespace turanlab {
namespace {

void check_universe(int universe_size, const char* where) {
  if (universe_size < 0 || universe_size > kMaxUniverse) {
    throw ScaleGuardError(std::string(where) + ": universe must have at most 64 variables");
  }
}

void check_inside(Support s, int universe_size, const char* where) {
  if (!s.subset_of(Support::full(universe_size))) {
    throw ArgumentError(std::string(where) + ": support outside the variable universe");
  }
}

bool by_bits(Support a, Support b) { return a.bits() < b.bits(); }

}  // namespace

std::vector<Support> minimize_antichain(std::vector<Support> sets) {
  std::sort(sets.begin(), sets.end(), [](Support a, Support b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Support> kept;
  for (Support s : sets) {
    if (std::none_of(kept.begin(), kept.end(), [s](Support k) { return k.subset_of(s); })) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), by_bits);
  return kept;
}

SquarefreeIdeal SquarefreeIdeal::from_generators(int universe_size, std::vector<Support> generators) {
  check_universe(universe_size, "SquarefreeIdeal");
  for (Support g : generators) check_inside(g, universe_size, "SquarefreeIdeal");
  SquarefreeIdeal ideal;
  ideal.form_ = IdealForm::kExplicit;
  ideal.universe_size_ = universe_size;
  ideal.sets_ = minimize_antichain(std::move(generators));
  return ideal;
}

SquarefreeIdeal SquarefreeIdeal::cover(int universe_size, std::vector<Support> copies) {
  check_universe(universe_size, "SquarefreeIdeal::cover");
  for (Support c : copies) check_inside(c, universe_size, "SquarefreeIdeal::cover");
  SquarefreeIdeal ideal;
  ideal.form_ = IdealForm::kCover;
  ideal.universe_size_ = universe_size;
  ideal.sets_ = std::move(copies);
  return ideal;
}

SquarefreeIdeal SquarefreeIdeal::implicit(int universe_size, MembershipPredicate predicate, PruneHook hook) {
  check_universe(universe_size, "SquarefreeIdeal::implicit");
  if (!predicate) throw ArgumentError("SquarefreeIdeal::implicit: missing predicate");
  SquarefreeIdeal ideal;
  ideal.form_ = IdealForm::kImplicit;
  ideal.universe_size_ = universe_size;
  ideal.predicate_ = std::move(predicate);
  ideal.hook_ = std::move(hook);
  return ideal;
}

bool SquarefreeIdeal::contains(Support m) const {
  switch (form_) {
    case IdealForm::kExplicit:
      return std::any_of(sets_.begin(), sets_.end(), [m](Support g) { return g.subset_of(m); });
    case IdealForm::kCover:
      return std::all_of(sets_.begin(), sets_.end(), [m](Support c) { return c.intersects(m); });
    case IdealForm::kImplicit:
      return predicate_(m);
  }
  return false;
}

std::vector<Support> SquarefreeIdeal::minimal_generators(const MonomialLimits& limits) const {
  switch (form_) {
    case IdealForm::kExplicit:
      return sets_;
    case IdealForm::kCover:
      return alexander_dual(sets_, limits);
    case IdealForm::kImplicit:
      break;
  }
  if (!members_.empty()) {
    // squarefree lcm of one generator from each member
    std::vector<Support> current{Support{}};
    for (const auto& member : members_) {
      const auto gens = member.minimal_generators(limits);
      std::vector<Support> next;
      for (Support a : current) {
        for (Support b : gens) {
          next.push_back(a | b);
          if (static_cast<std::int64_t>(next.size()) > limits.max_dual_size) {
            throw ScaleGuardError("minimal_generators: intersection expansion exceeds the cap");
          }
        }
      }
      current = minimize_antichain(std::move(next));
    }
    return current;
  }
  if (universe_size_ > limits.max_enumeration_universe) {
    throw ScaleGuardError("minimal_generators: universe too large for predicate enumeration");
  }
  std::vector<Support> out;
  const std::uint64_t limit = std::uint64_t{1} << universe_size_;
  for (std::uint64_t b = 0; b < limit; ++b) {
    const Support m(b);
    if (!predicate_(m)) continue;
    bool minimal = true;
    for (int i : m.elements()) {
      if (predicate_(Support(m).erase(i))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(m);
  }
  return out;
}

bool membership(Support m, const SquarefreeIdeal& ideal) {
  check_inside(m, ideal.universe_size(), "membership");
  return ideal.contains(m);
}

std::vector<Support> alexander_dual(std::span<const Support> generators, const MonomialLimits& limits) {
  const auto antichain = minimize_antichain({generators.begin(), generators.end()});
  std::vector<Support> transversals{Support{}};
  for (Support g : antichain) {
    std::vector<Support> next;
    for (Support t : transversals) {
      if (t.intersects(g)) {
        next.push_back(t);
        continue;
      }
      for (int e : g.elements()) next.push_back(Support(t).insert(e));
    }
    transversals = minimize_antichain(std::move(next));
    if (static_cast<std::int64_t>(transversals.size()) > limits.max_dual_size) {
      throw ScaleGuardError("alexander_dual: output exceeds the cap");
    }
  }
  return transversals;
}

SquarefreeIdeal intersect(int universe_size, std::vector<SquarefreeIdeal> ideals) {
  for (const auto& ideal : ideals) {
    if (ideal.universe_size() != universe_size) throw ArgumentError("intersect: universe mismatch");
  }
  auto shared = std::make_shared<const std::vector<SquarefreeIdeal>>(ideals);
  SquarefreeIdeal out = SquarefreeIdeal::implicit(universe_size, [shared](Support m) {
    return std::all_of(shared->begin(), shared->end(), [m](const SquarefreeIdeal& i) { return i.contains(m); });
  });
  out.members_ = std::move(ideals);
  return out;
}

namespace {

class TransversalSearch {
 public:
  TransversalSearch(std::span<const Support> sets, const TransversalCost& model, const MonomialLimits& limits)
      : sets_(sets), model_(model), limits_(limits) {}

  TransversalResult run() {
    best_.feasible = false;
    dfs(Support{}, Support{});
    best_.nodes = nodes_;
    return best_;
  }

 private:
  void dfs(Support chosen, Support excluded) {
    if (++nodes_ > limits_.max_nodes) throw ScaleGuardError("transversal search: node limit reached");
    std::vector<Support> unhit;
    for (Support s : sets_) {
      if (!s.intersects(chosen)) unhit.push_back(s);
    }
    if (unhit.empty()) {
      const std::int64_t c = model_.cost(chosen);
      if (!best_.feasible || c < best_.cost || (c == best_.cost && canonical_less(chosen, best_.witness))) {
        best_.feasible = true;
        best_.cost = c;
        best_.witness = chosen;
      }
      return;
    }
    // Equal bounds are kept so that the canonical witness is found.
    if (best_.feasible && model_.lower_bound(chosen, excluded, unhit) > best_.cost) return;

    Support branch = unhit.front().minus(excluded);
    for (Support s : unhit) {
      const Support remaining = s.minus(excluded);
      if (remaining.size() < branch.size()) branch = remaining;
    }
    Support skip = excluded;
    for (int e : branch.elements()) {
      dfs(Support(chosen).insert(e), skip);
      skip.insert(e);
    }
  }

  std::span<const Support> sets_;
  const TransversalCost& model_;
  const MonomialLimits& limits_;
  TransversalResult best_;
  std::int64_t nodes_ = 0;
};

}  // namespace

TransversalResult min_cost_transversal(std::span<const Support> sets, int universe_size, const TransversalCost& model,
                                       const MonomialLimits& limits) {
  check_universe(universe_size, "min_cost_transversal");
  if (static_cast<int>(sets.size()) > limits.max_copies) {
    throw ScaleGuardError("min_cost_transversal: too many sets");
  }
  for (Support s : sets) check_inside(s, universe_size, "min_cost_transversal");
  return TransversalSearch(sets, model, limits).run();
}

namespace {

// Greedy packing of pairwise disjoint unhit sets (restricted to allowed
// elements); each needs its own new element.
std::int64_t disjoint_packing(Support excluded, std::span<const Support> unhit) {
  Support used;
  std::int64_t count = 0;
  for (Support s : unhit) {
    const Support avail = s.minus(excluded);
    if (!avail.intersects(used)) {
      used |= avail;
      ++count;
    }
  }
  return count;
}

}  // namespace

HittingSet min_hitting_set(std::span<const Support> copies, int universe_size, const MonomialLimits& limits) {
  if (std::any_of(copies.begin(), copies.end(), [](Support c) { return c.empty(); })) {
    throw PreconditionError("min_hitting_set: the family contains an empty set");
  }
  TransversalCost model;
  model.cost = [](Support chosen) { return static_cast<std::int64_t>(chosen.size()); };
  model.lower_bound = [](Support chosen, Support excluded, std::span<const Support> unhit) {
    return chosen.size() + disjoint_packing(excluded, unhit);
  };
  const auto result = min_cost_transversal(copies, universe_size, model, limits);
  return {static_cast<int>(result.cost), result.witness};
}

std::optional<Support> find_member_of_size(const SquarefreeIdeal& ideal, int size, const MonomialLimits& limits) {
  const int n = ideal.universe_size();
  if (size < 0 || size > n) return std::nullopt;
  std::int64_t nodes = 0;
  std::optional<Support> found;
  std::function<bool(int, Support)> dfs = [&](int next, Support chosen) -> bool {
    if (++nodes > limits.max_nodes) throw ScaleGuardError("find_member_of_size: node limit reached");
    const int count = chosen.size();
    if (count == size) {
      if (ideal.contains(chosen)) {
        found = chosen;
        return true;
      }
      return false;
    }
    if (count + (n - next) < size) return false;
    const Support undecided = Support::full(n).minus(Support::full(next));
    // ideals are closed upward, so the largest completion must be a member
    if (!ideal.contains(chosen | undecided)) return false;
    if (ideal.prune_hook() && !ideal.prune_hook()(chosen, undecided, size)) return false;
    if (dfs(next + 1, Support(chosen).insert(next))) return true;
    return dfs(next + 1, chosen);
  };
  dfs(0, Support{});
  return found;
}

InitialDegree initial_degree(const SquarefreeIdeal& ideal, const MonomialLimits& limits) {
  switch (ideal.form()) {
    case IdealForm::kExplicit: {
      InitialDegree out;
      for (Support g : ideal.generators()) {
        if (!out.value || g.size() < *out.value || (g.size() == *out.value && canonical_less(g, out.witness))) {
          out.value = g.size();
          out.witness = g;
        }
      }
      return out;
    }
    case IdealForm::kCover: {
      const auto& copies = ideal.copies();
      if (std::any_of(copies.begin(), copies.end(), [](Support c) { return c.empty(); })) return {};
      const HittingSet hs = min_hitting_set(copies, ideal.universe_size(), limits);
      return {hs.size, hs.witness};
    }
    case IdealForm::kImplicit:
      break;
  }
  if (ideal.is_zero()) return {};
  for (int k = 0; k <= ideal.universe_size(); ++k) {
    if (auto m = find_member_of_size(ideal, k, limits)) return {k, *m};
  }
  return {};
}

}  // namespace turanlab
