#include "turanlab/selftest.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "turanlab/codegree_star.hpp"
#include "turanlab/combinatorics.hpp"
#include "turanlab/diagonal.hpp"
#include "turanlab/dictionary.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/squarezero.hpp"

namespace turanlab {
namespace {

// Collects failures; the first few go into the detail line.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::string detail(const std::string& summary) const {
    std::ostringstream out;
    out << summary << " (" << checks_ - failures_ << "/" << checks_ << " checks)";
    if (failures_ > 0) out << " failures: " << notes_.str();
    return out.str();
  }

 private:
  std::int64_t checks_ = 0;
  std::int64_t failures_ = 0;
  std::ostringstream notes_;
};

std::string tag(std::initializer_list<std::int64_t> values) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (auto v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << ")";
  return out.str();
}

CriterionResult counterexamples(const SelftestOptions&) {
  Tally tally;
  const int pairs[][2] = {{3, 3}, {3, 4}, {3, 5}, {4, 4}, {4, 5}, {4, 6}, {5, 5}, {5, 6}};
  for (auto [ell, n] : pairs) {
    const DiagonalParams params{n, ell};
    const CounterexampleReport report = verify_counterexample(params);
    const std::int64_t d = 3 * (binomial(n, 3) - turan_count(n, ell - 1, 3));
    tally.check(report.in_di, "F not in DI at " + tag({ell, n}));
    tally.check(report.f_homogeneous && report.f_degree < d && report.generator_degree_bound == d,
                "degree gap fails at " + tag({ell, n}));
    tally.check(report.confirmed(), "not confirmed at " + tag({ell, n}));
  }
  return {1, "counterexample theorem", tally.passed(), tally.detail("8 (ell,n) pairs")};
}

CriterionResult partite_lemma(const SelftestOptions& options) {
  Tally tally;
  for (int ell : {3, 4}) {
    for (int n = 3; n <= 5; ++n) {
      const LemmaReport report =
          verify_lemma_partite_generators(n, ell, 20, options.seed + static_cast<std::uint64_t>(10 * ell + n));
      tally.check(report.trials.size() == 20, "wrong trial count");
      for (const auto& trial : report.trials) tally.check(trial.in_di, "p_G not in DI at " + tag({n, ell}));
    }
  }
  return {2, "partite generator lemma", tally.passed(), tally.detail("n in 3..5, ell in {3,4}, 20 graphs each")};
}

CriterionResult dictionary_identity(const SelftestOptions& options) {
  Tally tally;
  SearchOptions search;
  search.threads = options.threads;
  struct Case {
    FamilySpec spec;
    int n;
    int q;  // ell - 1
    std::int64_t expected;
  };
  const std::vector<Case> cases = {
      {complete_graph_pattern(3), 4, 2, 4},   {complete_graph_pattern(3), 5, 2, 6},
      {complete_graph_pattern(3), 6, 2, 9},   {complete_graph_pattern(3), 7, 2, 12},
      {complete_graph_pattern(4), 5, 3, 8},   {complete_graph_pattern(4), 6, 3, 12},
      {CoreFamily{3, 3}, 4, 2, 0},            {CoreFamily{3, 3}, 5, 2, 0},
      {CoreFamily{4, 3}, 4, 3, 2},            {CoreFamily{4, 3}, 5, 3, 4},
  };
  for (const auto& c : cases) {
    const std::string where = family_name(c.spec) + " n=" + std::to_string(c.n);
    const CoverExResult cover = ex_via_cover(c.n, c.spec);
    const ExtremalResult oracle = brute_force_ex(c.n, c.spec, search);
    tally.check(cover.value == oracle.value, where + ": cover " + std::to_string(cover.value) + " vs brute force " +
                                                 std::to_string(oracle.value));
    tally.check(cover.value == c.expected, where + ": unexpected value " + std::to_string(cover.value));
    tally.check(cover.value == turan_count(c.n, c.q, family_uniformity(c.spec)), where + ": differs from turan_count");
    tally.check(cover.witness_free && cover.witness.edge_count() == cover.value, where + ": witness not extremal");
  }
  return {3, "cover dictionary", tally.passed(), tally.detail("10 instances")};
}

CriterionResult generalized_turan(const SelftestOptions& options) {
  Tally tally;
  SearchOptions search;
  search.threads = options.threads;
  const int cases[][3] = {{3, 4, 4}, {3, 4, 5}, {3, 4, 6}, {2, 3, 6}, {3, 5, 6}};
  for (auto [t, f, n] : cases) {
    const auto target = complete_graph_pattern(t);
    const auto forbidden = complete_graph_pattern(f);
    const GenExResult cover = gen_ex_via_cover(n, target, forbidden);
    const ExtremalResult oracle = brute_force_gen_ex(n, target, forbidden, search);
    tally.check(cover.value == oracle.value, "mismatch at " + tag({t, f, n}));
    tally.check(cover.witness_free, "witness contains K" + std::to_string(f) + " at " + tag({t, f, n}));
    tally.check(cover.value == turan_count(n, f - 1, t), "clique corollary fails at " + tag({t, f, n}));
    if (t == 3 && f == 4 && n == 6) tally.check(cover.value == 8, "ex(6,K3,K4) != 8");
  }
  return {4, "generalized Turan", tally.passed(), tally.detail("5 (T,F,n) instances")};
}

CriterionResult hilbert_turan(const SelftestOptions&) {
  Tally tally;
  std::int64_t graphs = 0;
  for (int n = 3; n <= 5; ++n) {
    for (int q = 1; q < n; ++q) {
      for (int r = 2; r <= n; ++r) {
        const HilbertTuranReport report = brute_force_hilbert_turan(n, q, r);
        graphs += report.checked;
        tally.check(report.violations == 0, "violation at " + tag({n, q, r}));
        tally.check(report.max_found == report.bound && report.balanced_attains, "not sharp at " + tag({n, q, r}));
      }
    }
  }
  return {5, "Hilbert-Turan bound", tally.passed(),
          tally.detail(std::to_string(graphs) + " kill graphs with top vanishing")};
}

// Blow-up of a random base graph, so parallel classes with zero products
// between them are common.
SquareZeroQuotient random_blowup(std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(3, 8)(rng);
  const int k = std::uniform_int_distribution<int>(2, n)(rng);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels[v] = v < k ? v : std::uniform_int_distribution<int>(0, k - 1)(rng);
  std::shuffle(labels.begin(), labels.end(), rng);
  const double density = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::vector<bool>> base(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) base[i][j] = base[j][i] = edge(rng);
  }
  SquareZeroQuotient a(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (labels[x] == labels[y] || base[labels[x]][labels[y]]) a.kill(x, y);
    }
  }
  return a;
}

int independence_number(const SquareZeroQuotient& a) {
  int q = 0;
  while (hilbert(a, q + 1) > 0) ++q;
  return q;
}

CriterionResult cloning_lemma(const SelftestOptions& options) {
  Tally tally;
  std::mt19937_64 rng(options.seed);
  int instances = 0;
  while (instances < 1000) {
    const SquareZeroQuotient a = random_blowup(rng);
    const ParallelPartition partition = parallel_classes(a);
    std::vector<std::pair<int, int>> admissible;
    for (std::size_t i = 0; i < partition.classes.size(); ++i) {
      for (std::size_t j = i + 1; j < partition.classes.size(); ++j) {
        if (partition.cross_zero[i][j]) admissible.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
    if (admissible.empty()) continue;
    ++instances;
    const int n = a.n();
    const auto [i, j] = admissible[std::uniform_int_distribution<std::size_t>(0, admissible.size() - 1)(rng)];
    const VertexSet u = partition.classes[i];
    const VertexSet v = partition.classes[j];
    const int r = std::uniform_int_distribution<int>(2, n)(rng);
    const int q = independence_number(a);
    const std::string where = "instance " + std::to_string(instances);

    const std::int64_t lambda_u = lambda(a, std::countr_zero(u), r - 1);
    const std::int64_t lambda_v = lambda(a, std::countr_zero(v), r - 1);
    const SquareZeroQuotient v_from_u = clone(a, u, v, CloneDirection::kVFromU);
    const SquareZeroQuotient u_from_v = clone(a, u, v, CloneDirection::kUFromV);
    tally.check(hilbert(v_from_u, r) - hilbert(a, r) == vertex_count(v) * (lambda_u - lambda_v), where + ": V<-U ledger");
    tally.check(hilbert(u_from_v, r) - hilbert(a, r) == vertex_count(u) * (lambda_v - lambda_u), where + ": U<-V ledger");
    tally.check(top_vanishing(v_from_u, q) && top_vanishing(u_from_v, q), where + ": top vanishing lost");

    const SymmetrizeResult sym = symmetrize(a, q, r);
    tally.check(static_cast<int>(sym.trace.size()) < n, where + ": symmetrize took n or more steps");
    bool monotone = true;
    for (const auto& step : sym.trace) monotone = monotone && step.hilbert_after >= step.hilbert_before;
    tally.check(monotone, where + ": hilbert decreased");
    std::vector<std::int64_t> sizes;
    for (VertexSet c : sym.classes) sizes.push_back(vertex_count(c));
    tally.check(hilbert(sym.terminal, r) == elem_sym_by_subsets(sizes, r), where + ": terminal hilbert != e_r");
    tally.check(static_cast<int>(sizes.size()) <= q && top_vanishing(sym.terminal, q), where + ": terminal too large");
  }
  return {6, "cloning lemma", tally.passed(), tally.detail("1000 random quotients with admissible class pairs")};
}

CriterionResult smoothing_identity(const SelftestOptions& options) {
  Tally tally;
  std::mt19937_64 rng(options.seed + 7);
  for (int t = 0; t < 500; ++t) {
    const int length = std::uniform_int_distribution<int>(2, 6)(rng);
    std::vector<std::int64_t> values(static_cast<std::size_t>(length));
    for (auto& x : values) x = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int r = 0; r <= 6; ++r) {
      // the identity for every ordered pair of positions with a >= 1
      for (int i = 0; i < length; ++i) {
        for (int j = 0; j < length; ++j) {
          if (i == j || values[i] < 1) continue;
          std::vector<std::int64_t> rest;
          for (int k = 0; k < length; ++k) {
            if (k != i && k != j) rest.push_back(values[k]);
          }
          auto moved = values;
          moved[i] -= 1;
          moved[j] += 1;
          const std::int64_t lhs = elem_sym_by_subsets(moved, r) - elem_sym_by_subsets(values, r);
          const std::int64_t rhs = (values[i] - values[j] - 1) * elem_sym_by_subsets(rest, r - 2);
          tally.check(lhs == rhs, "identity fails at tuple " + std::to_string(t) + " r=" + std::to_string(r));
        }
      }
      const SmoothingResult step = smoothing_step(values, r);
      const std::int64_t actual = elem_sym_by_subsets(step.values, r) - elem_sym_by_subsets(values, r);
      tally.check(step.delta == actual && step.delta >= 0, "smoothing delta at tuple " + std::to_string(t));
    }
  }
  return {7, "smoothing identity", tally.passed(), tally.detail("500 tuples, r in 0..6")};
}

CriterionResult collapse(const SelftestOptions&) {
  Tally tally;
  const int triples[][3] = {{2, 3, 4}, {2, 3, 5}, {3, 3, 4}, {3, 3, 5}, {3, 4, 4}, {3, 4, 5}};
  std::int64_t supports = 0;
  for (auto [r, ell, n] : triples) {
    const CollapseReport report = verify_collapse({n, ell, r});
    supports += report.checked;
    tally.check(report.exhaustive && report.ok(), "collapse fails at " + tag({r, ell, n}));
  }
  return {8, "cover ideal collapse", tally.passed(),
          tally.detail("6 (r,ell,n) triples, " + std::to_string(supports) + " supports")};
}

CriterionResult initial_degree_mubayi(const SelftestOptions& options) {
  Tally tally;
  for (int r : {2, 3}) {
    for (int ell : {3, 4, 5}) {
      for (int n = ell; n <= 6; ++n) {
        const CodegreeStarParams params{n, ell, r};
        const std::string where = tag({r, ell, n});
        const AlphaJResult alpha = alpha_j(params);
        tally.check(alpha.ok(), "alpha_J certificate fails at " + where);
        tally.check(alpha.value == binomial(n, r) - turan_count(n, ell - 1, r), "alpha_J value at " + where);
        SearchOptions search;
        search.threads = options.threads;
        const std::int64_t oracle = brute_force_ex(n, CoreFamily{ell, r}, search).value;
        tally.check(binomial(n, r) - alpha.value == oracle, "Mubayi chain fails at " + where);
      }
    }
  }
  return {9, "initial degree and Mubayi", tally.passed(), tally.detail("r in {2,3}, ell in {3,4,5}, ell <= n <= 6")};
}

Polynomial random_polynomial(int nvars, std::mt19937_64& rng) {
  Polynomial p(nvars);
  const int terms = std::uniform_int_distribution<int>(1, 6)(rng);
  for (int t = 0; t < terms; ++t) {
    Exponent e{};
    for (int i = 0; i < nvars; ++i) e.e[i] = static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, 3)(rng));
    Rational c(std::uniform_int_distribution<int>(-9, 9)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

CriterionResult vacuous_range(const SelftestOptions& options) {
  Tally tally;
  std::mt19937_64 rng(options.seed + 11);
  for (int ell = 3; ell <= 6; ++ell) {
    for (int n = 1; n < ell; ++n) {
      for (int s = 0; s < 10; ++s) {
        const Polynomial p = random_polynomial(n, rng);
        tally.check(in_I(p, {n, ell}) && in_DI(p, {n, ell}), "in_I/in_DI false at " + tag({n, ell}));
      }
      for (int r : {2, 3}) {
        const CodegreeStarParams params{n, ell, r};
        tally.check(membership_j(Support{}, params), "1 not in J at " + tag({n, ell, r}));
        tally.check(alpha_j(params).value == 0, "alpha_J nonzero at " + tag({n, ell, r}));
        tally.check(turan_count(n, ell - 1, r) == binomial(n, r), "t_r(n,ell-1) != C(n,r) at " + tag({n, ell, r}));
      }
    }
  }
  return {10, "vacuous range", tally.passed(), tally.detail("n < ell, ell in 3..6")};
}

}  // namespace

std::int64_t elem_sym_by_subsets(const std::vector<std::int64_t>& values, int r) {
  if (r < 0 || r > static_cast<int>(values.size())) return 0;
  const std::uint32_t limit = std::uint32_t{1} << values.size();
  std::int64_t total = 0;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != r) continue;
    std::int64_t product = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if ((mask >> i) & 1U) product *= values[i];
    }
    total += product;
  }
  return total;
}

CriterionResult run_criterion(int id, const SelftestOptions& options) {
  using Runner = CriterionResult (*)(const SelftestOptions&);
  static constexpr Runner runners[kCriterionCount] = {
      counterexamples, partite_lemma,  dictionary_identity, generalized_turan, hilbert_turan,
      cloning_lemma,   smoothing_identity, collapse,        initial_degree_mubayi, vacuous_range,
  };
  if (id < 1 || id > kCriterionCount) throw ArgumentError("run_criterion: unknown criterion id");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  try {
    result = runners[id - 1](options);
  } catch (const std::exception& e) {
    result = {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()};
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(const SelftestOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace turanlab
