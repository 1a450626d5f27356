#include "turanlab/diagonal.hpp"

#include <algorithm>
#include <functional>

#include "turanlab/combinatorics.hpp"
#include "turanlab/errors.hpp"

namespace turanlab {

Polynomial build_pG(int n, const RGraph& g, const PolyLimits& limits) {
  if (g.r() != 3 || g.n() != n) throw ArgumentError("build_pG: need a 3-graph on [n]");
  if (n > limits.max_vars) {
    throw ScaleGuardError("build_pG: n = " + std::to_string(n) + " exceeds the polynomial cap " +
                          std::to_string(limits.max_vars));
  }
  Polynomial p = Polynomial::constant(n, 1);
  for_each_k_subset(n, 3, [&](VertexSet triple) {
    if (g.has_edge(triple)) return true;
    const auto v = vertices_of(triple);
    p *= Polynomial::difference(n, v[0], v[1]);
    p *= Polynomial::difference(n, v[0], v[2]);
    p *= Polynomial::difference(n, v[1], v[2]);
    return true;
  });
  return p;
}

bool in_I(const Polynomial& p, const DiagonalParams& params) {
  if (p.nvars() != params.n) throw ArgumentError("in_I: polynomial arity differs from n");
  if (params.ell < 1) throw ArgumentError("in_I: ell must be positive");
  // lexicographic order of ell-subsets, first failure decides
  bool ok = true;
  std::vector<int> chosen;
  std::function<void(int)> visit = [&](int start) {
    if (!ok) return;
    if (static_cast<int>(chosen.size()) == params.ell) {
      ok = poly_identify(p, chosen).is_zero();
      return;
    }
    for (int v = start; v < params.n && ok; ++v) {
      chosen.push_back(v);
      visit(v + 1);
      chosen.pop_back();
    }
  };
  visit(0);
  return ok;
}

bool in_DI(const Polynomial& p, const DiagonalParams& params) {
  if (p.nvars() != params.n) throw ArgumentError("in_DI: polynomial arity differs from n");
  if (!params.non_vacuous()) return true;
  const int max_order = std::max(0, params.n - 3);
  if (!in_I(p, params)) return false;
  for (int i = 0; i < params.n; ++i) {
    Polynomial derivative = p;
    for (int j = 1; j <= max_order; ++j) {
      derivative = poly_derivative(derivative, i, 1);
      if (!in_I(derivative, params)) return false;
    }
  }
  return true;
}

std::vector<int> witness_partition(const DiagonalParams& params) {
  if (params.ell < 4) throw ArgumentError("witness_partition: defined for ell >= 4");
  return balanced_part_labels(params.n, params.ell - 2);
}

Polynomial build_F(const DiagonalParams& params) {
  if (params.ell < 3 || params.n < params.ell) throw ArgumentError("build_F: need ell >= 3 and n >= ell");
  const int n = params.n;
  Polynomial f = Polynomial::constant(n, 1);
  if (params.ell >= 4) {
    const auto labels = witness_partition(params);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (labels[a] == labels[b]) f *= Polynomial::difference(n, a, b);
      }
    }
  } else if (n >= 4) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) f *= Polynomial::difference(n, a, b);
    }
  } else {
    f = Polynomial::difference(n, 0, 1);
  }
  return f;
}

std::int64_t min_generator_degree(const DiagonalParams& params) {
  if (params.ell < 3 || params.n < 3) throw ArgumentError("min_generator_degree: need ell >= 3 and n >= 3");
  return 3 * (binomial(params.n, 3) - turan_count(params.n, params.ell - 1, 3));
}

std::string CounterexampleReport::verdict() const {
  return confirmed() ? "counterexample confirmed" : "not confirmed";
}

namespace {

bool pigeonhole_holds(const DiagonalParams& params) {
  if (params.ell < 4) return true;
  const auto labels = witness_partition(params);
  return for_each_k_subset(params.n, params.ell, [&](VertexSet set) {
    VertexSet parts = 0;
    for (int v : vertices_of(set)) {
      const VertexSet bit = VertexSet{1} << labels[v];
      if (parts & bit) return true;
      parts |= bit;
    }
    return false;
  });
}

}  // namespace

CounterexampleReport verify_counterexample(const DiagonalParams& params, const PolyLimits& limits) {
  if (params.ell < 3 || params.n < params.ell) {
    throw ArgumentError("verify_counterexample: need ell >= 3 and n >= ell");
  }
  if (params.n > limits.max_vars) {
    throw ScaleGuardError("verify_counterexample: n exceeds the polynomial cap");
  }
  const Polynomial f = build_F(params);
  const DegreeInfo info = poly_degree_info(f);
  CounterexampleReport report;
  report.n = params.n;
  report.ell = params.ell;
  report.f_degree = info.degree.value_or(-1);
  report.f_homogeneous = info.degree.has_value() && info.homogeneous;
  report.generator_degree_bound = min_generator_degree(params);
  report.in_di = in_DI(f, params);
  report.degree_gap_ok = info.degree.has_value() && *info.degree < report.generator_degree_bound;
  report.pigeonhole_ok = pigeonhole_holds(params);
  return report;
}

RGraph random_partite_3graph(int n, int parts, std::mt19937_64& rng) {
  if (parts < 1) throw ArgumentError("random_partite_3graph: need at least one part");
  std::uniform_int_distribution<int> label_dist(0, parts - 1);
  std::bernoulli_distribution keep(0.5);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int& l : labels) l = label_dist(rng);
  std::vector<VertexSet> edges;
  for_each_k_subset(n, 3, [&](VertexSet triple) {
    const auto v = vertices_of(triple);
    const bool transversal = labels[v[0]] != labels[v[1]] && labels[v[0]] != labels[v[2]] && labels[v[1]] != labels[v[2]];
    if (transversal && keep(rng)) edges.push_back(triple);
    return true;
  });
  return RGraph(n, 3, std::move(edges));
}

LemmaReport verify_lemma_partite_generators(int n, int ell, int trials, std::uint64_t seed,
                                            const PolyLimits& limits) {
  if (ell < 3) throw ArgumentError("verify_lemma_partite_generators: ell must be at least 3");
  if (n > limits.max_vars) throw ScaleGuardError("verify_lemma_partite_generators: n exceeds the polynomial cap");
  std::mt19937_64 rng(seed);
  LemmaReport report;
  const DiagonalParams params{n, ell};
  for (int t = 0; t < trials; ++t) {
    RGraph g = random_partite_3graph(n, ell - 1, rng);
    const Polynomial p = build_pG(n, g, limits);
    const bool ok = in_DI(p, params);
    report.all_in_di = report.all_in_di && ok;
    report.trials.push_back({std::move(g), ok, poly_degree_info(p).degree.value_or(-1)});
  }
  return report;
}

}  // namespace turanlab
