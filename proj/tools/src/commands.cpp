#include "turanlab_cli/commands.hpp"

#include <chrono>

#include "turanlab/codegree_star.hpp"
#include "turanlab/combinatorics.hpp"
#include "turanlab/diagonal.hpp"
#include "turanlab/dictionary.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/selftest.hpp"
#include "turanlab/squarezero.hpp"
#include "turanlab_cli/specs.hpp"

namespace turanlab::cli {
namespace {

using Clock = std::chrono::steady_clock;

RunReport start_report(const std::string& command, Json params) {
  RunReport report;
  report.command = command;
  report.params = std::move(params);
  report.version = version_string();
  return report;
}

void stamp(RunReport& report, Clock::time_point start) {
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Json class_lists(const std::vector<VertexSet>& classes) {
  auto out = Json::array();
  for (VertexSet c : classes) out.push_back(vertex_list(c));
  return out;
}

Json pair_lists(const std::vector<std::pair<int, int>>& pairs) {
  auto out = Json::array();
  for (auto [a, b] : pairs) out.push_back({a + 1, b + 1});
  return out;
}

}  // namespace

CommandOutcome error_outcome(const std::string& command, int exit_code, const std::string& message) {
  RunReport report = start_report(command, Json::object());
  report.result = {{"error", message}};
  return {std::move(report), exit_code};
}

CommandOutcome guarded(const std::string& command, const std::function<CommandOutcome()>& body) {
  try {
    return body();
  } catch (const ScaleGuardError& e) {
    return error_outcome(command, kExitScaleGuard, e.what());
  } catch (const ArgumentError& e) {
    return error_outcome(command, kExitBadInput, e.what());
  } catch (const PreconditionError& e) {
    return error_outcome(command, kExitBadInput, e.what());
  }
}

CommandOutcome cmd_verify_counterexample(int ell, int n) {
  const auto start = Clock::now();
  RunReport report = start_report("verify-counterexample", {{"ell", ell}, {"n", n}});
  const DiagonalParams params{n, ell};
  if (ell < 3 || !params.non_vacuous()) throw ArgumentError("verify-counterexample: need ell >= 3 and n >= ell");
  const CounterexampleReport check = verify_counterexample(params);
  report.result = {{"f_degree", check.f_degree},
                   {"f_homogeneous", check.f_homogeneous},
                   {"generator_degree_bound", check.generator_degree_bound},
                   {"in_di", check.in_di},
                   {"degree_gap_ok", check.degree_gap_ok},
                   {"pigeonhole_ok", check.pigeonhole_ok},
                   {"confirmed", check.confirmed()},
                   {"verdict", check.verdict()}};
  if (ell >= 4) {
    auto parts = Json::array();
    for (int label : witness_partition(params)) parts.push_back(label + 1);
    report.witnesses = Json{{"partition_labels", parts}};
  }
  stamp(report, start);
  return {std::move(report), check.confirmed() ? kExitOk : kExitClaimFailed};
}

CommandOutcome cmd_ex(int n, const std::string& forbid, bool oracle, int threads) {
  const auto start = Clock::now();
  const FamilySpec spec = parse_family_spec(forbid);
  RunReport report = start_report("ex", {{"n", n}, {"forbid", family_name(spec)}, {"oracle", oracle}, {"threads", threads}});
  const CoverExResult cover = ex_via_cover(n, spec);
  const EdgeUniverse universe(n, family_uniformity(spec));
  report.result = {{"value", cover.value},
                   {"alpha", cover.alpha},
                   {"edge_variables", universe.size()},
                   {"witness_free", cover.witness_free}};
  report.witnesses = Json{{"witness_edges", edge_lists(cover.witness.edges())},
                          {"hitting_set", support_edges(universe, cover.hitting_witness)}};
  bool ok = cover.witness_free && cover.witness.edge_count() == cover.value;
  if (oracle) {
    SearchOptions options;
    options.threads = threads;
    const ExtremalResult brute = brute_force_ex(n, spec, options);
    const bool match = brute.value == cover.value;
    report.oracle = Json{{"oracle_value", brute.value}, {"match", match}, {"witness_edges", edge_lists(brute.witness.edges())}};
    ok = ok && match;
  }
  stamp(report, start);
  return {std::move(report), ok ? kExitOk : kExitClaimFailed};
}

CommandOutcome cmd_gen_ex(int n, const std::string& target, const std::string& forbid, bool oracle, int threads) {
  const auto start = Clock::now();
  const FamilySpec target_spec = parse_family_spec(target);
  const FamilySpec forbid_spec = parse_family_spec(forbid);
  RunReport report = start_report("gen-ex", {{"n", n},
                                             {"target", family_name(target_spec)},
                                             {"forbid", family_name(forbid_spec)},
                                             {"oracle", oracle},
                                             {"threads", threads}});
  const GenExResult cover = gen_ex_via_cover(n, target_spec, forbid_spec);
  const EdgeUniverse universe(n, 2);
  report.result = {{"value", cover.value},
                   {"target_copies", cover.target_count},
                   {"alpha_t", cover.alpha.value},
                   {"witness_free", cover.witness_free}};
  report.witnesses = Json{{"witness_edges", edge_lists(cover.witness.edges())},
                          {"cover_support", support_edges(universe, cover.alpha.witness)}};
  bool ok = cover.witness_free;
  if (oracle) {
    SearchOptions options;
    options.threads = threads;
    const ExtremalResult brute = brute_force_gen_ex(n, target_spec, forbid_spec, options);
    const bool match = brute.value == cover.value;
    report.oracle = Json{{"oracle_value", brute.value}, {"match", match}, {"witness_edges", edge_lists(brute.witness.edges())}};
    ok = ok && match;
  }
  stamp(report, start);
  return {std::move(report), ok ? kExitOk : kExitClaimFailed};
}

CommandOutcome cmd_hilbert(int n, const std::string& kill, std::optional<int> degree, std::optional<int> q) {
  const auto start = Clock::now();
  const auto pairs = parse_kill_list(kill, n);
  const SquareZeroQuotient a(n, pairs);
  Json params{{"n", n}, {"kill", pair_lists(a.kill_pairs())}};
  if (degree) params["d"] = *degree;
  if (q) params["q"] = *q;
  RunReport report = start_report("hilbert", std::move(params));
  auto function = Json::array();
  for (int d = 0; d <= n; ++d) function.push_back(hilbert(a, d));
  report.result = {{"hilbert_function", function}};
  if (degree) {
    if (*degree < 0) throw ArgumentError("hilbert: d must be nonnegative");
    report.result["value"] = hilbert(a, *degree);
  }
  bool ok = true;
  if (q) {
    if (*q < 1) throw ArgumentError("hilbert: q must be positive");
    const bool vanishing = top_vanishing(a, *q);
    report.result["top_vanishing"] = vanishing;
    if (vanishing && degree) {
      const std::int64_t bound = turan_count(n, *q, *degree);
      report.result["turan_bound"] = bound;
      ok = hilbert(a, *degree) <= bound;
    }
  }
  report.witnesses = Json{{"parallel_classes", class_lists(parallel_classes(a).classes)}};
  stamp(report, start);
  return {std::move(report), ok ? kExitOk : kExitClaimFailed};
}

CommandOutcome cmd_symmetrize(int n, int q, int r, const std::string& kill) {
  const auto start = Clock::now();
  if (q < 1 || r < 1) throw ArgumentError("symmetrize: need q >= 1 and r >= 1");
  const SquareZeroQuotient a(n, parse_kill_list(kill, n));
  RunReport report = start_report("symmetrize", {{"n", n}, {"q", q}, {"r", r}, {"kill", pair_lists(a.kill_pairs())}});
  const SymmetrizeResult sym = symmetrize(a, q, r);

  auto trace = Json::array();
  for (const auto& step : sym.trace) {
    trace.push_back({{"u", vertex_list(step.u)},
                     {"v", vertex_list(step.v)},
                     {"direction", step.direction == CloneDirection::kVFromU ? "V<-U" : "U<-V"},
                     {"lambda_u", step.lambda_u},
                     {"lambda_v", step.lambda_v},
                     {"hilbert_before", step.hilbert_before},
                     {"hilbert_after", step.hilbert_after}});
  }
  std::vector<std::int64_t> sizes;
  for (VertexSet c : sym.classes) sizes.push_back(vertex_count(c));
  const std::int64_t initial = hilbert(a, r);
  const std::int64_t terminal = hilbert(sym.terminal, r);
  const std::int64_t bound = turan_count(n, q, r);
  report.result = {{"steps", sym.trace.size()},
                   {"hilbert_initial", initial},
                   {"hilbert_terminal", terminal},
                   {"elem_sym_class_sizes", elem_sym(sizes, r)},
                   {"turan_bound", bound},
                   {"terminal_classes", class_lists(sym.classes)},
                   {"terminal_kill", pair_lists(sym.terminal.kill_pairs())}};
  report.witnesses = Json{{"trace", trace}};
  const bool ok = terminal >= initial && terminal == elem_sym(sizes, r) && terminal <= bound &&
                  static_cast<int>(sizes.size()) <= q;
  stamp(report, start);
  return {std::move(report), ok ? kExitOk : kExitClaimFailed};
}

CommandOutcome cmd_alpha(int n, const std::string& forbid, const std::optional<std::string>& target) {
  const auto start = Clock::now();
  const FamilySpec forbid_spec = parse_family_spec(forbid);
  Json params{{"n", n}, {"forbid", family_name(forbid_spec)}};
  if (!target) {
    RunReport report = start_report("alpha", std::move(params));
    const CoverInstance inst = make_cover_instance(n, forbid_spec);
    const InitialDegree alpha = initial_degree(cover_ideal(inst));
    if (!alpha.value) throw PreconditionError("alpha: a forbidden copy has no edges");
    report.result = {{"alpha", *alpha.value},
                     {"edge_variables", inst.universe.size()},
                     {"forbidden_copies", inst.forbidden.copies.size()},
                     {"ex", binomial(n, inst.r) - *alpha.value}};
    report.witnesses = Json{{"witness_support", support_edges(inst.universe, alpha.witness)}};
    stamp(report, start);
    return {std::move(report), kExitOk};
  }
  const FamilySpec target_spec = parse_family_spec(*target);
  params["target"] = family_name(target_spec);
  RunReport report = start_report("alpha", std::move(params));
  const CoverInstance inst = make_cover_instance(n, target_spec, forbid_spec);
  const AlphaTResult alpha = alpha_t(inst);
  report.result = {{"alpha_t", alpha.value},
                   {"target_copies", inst.target->copies.size()},
                   {"quotient_rank", quotient_rank(alpha.witness, *inst.target)}};
  report.witnesses = Json{{"witness_support", support_edges(inst.universe, alpha.witness)}};
  stamp(report, start);
  return {std::move(report), kExitOk};
}

CommandOutcome cmd_codegree_star(const CodegreeStarRequest& request) {
  const auto start = Clock::now();
  const CodegreeStarParams params{request.n, request.ell, request.r};
  params.validate();
  Json json_params{{"n", request.n},
                   {"ell", request.ell},
                   {"r", request.r},
                   {"verify_collapse", request.verify_collapse},
                   {"alpha", request.alpha},
                   {"oracle", request.oracle}};
  if (request.verify_collapse) {
    json_params["samples"] = request.samples;
    json_params["seed"] = request.seed;
  }
  RunReport report = start_report("codegree-star", std::move(json_params));
  const EdgeUniverse universe = params.universe();
  const std::int64_t mubayi = turan_count(request.n, request.ell - 1, request.r);
  const Support m0 = m0_witness(params);
  report.result = {{"expected", universe.size() - mubayi},
                   {"mubayi_value", mubayi},
                   {"m0_degree", m0.size()},
                   {"m0_member", membership_j(m0, params)}};
  Json witnesses{{"m0_support", support_edges(universe, m0)}};
  bool ok = membership_j(m0, params) && m0.size() == universe.size() - mubayi;

  if (request.verify_collapse) {
    const CollapseReport collapse = verify_collapse(params, request.samples, request.seed);
    report.result["collapse_ok"] = collapse.ok();
    report.result["collapse_exhaustive"] = collapse.exhaustive;
    report.result["collapse_checked"] = collapse.checked;
    ok = ok && collapse.ok();
  }
  if (request.alpha) {
    const AlphaJResult alpha = alpha_j(params);
    report.result["alpha"] = alpha.value;
    report.result["alpha_certified"] = alpha.ok();
    witnesses["witness_support"] = support_edges(universe, alpha.witness);
    ok = ok && alpha.ok();
  }
  if (request.oracle) {
    SearchOptions options;
    options.threads = request.threads;
    const ExtremalResult brute = brute_force_ex(request.n, CoreFamily{request.ell, request.r}, options);
    report.oracle = Json{{"oracle_ex", brute.value},
                         {"match", brute.value == mubayi},
                         {"witness_edges", edge_lists(brute.witness.edges())}};
    ok = ok && brute.value == mubayi;
  }
  report.witnesses = std::move(witnesses);
  stamp(report, start);
  return {std::move(report), ok ? kExitOk : kExitClaimFailed};
}

CommandOutcome cmd_selftest(std::optional<int> criterion, int threads, std::uint64_t seed) {
  const auto start = Clock::now();
  Json params{{"threads", threads}, {"seed", seed}};
  if (criterion) params["criterion"] = *criterion;
  RunReport report = start_report("selftest", std::move(params));
  const SelftestOptions options{threads, seed};
  std::vector<CriterionResult> results;
  if (criterion) {
    results.push_back(run_criterion(*criterion, options));
  } else {
    results = run_acceptance(options);
  }
  auto rows = Json::array();
  bool all = true;
  for (const auto& r : results) {
    rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  report.result = {{"criteria", rows}, {"all_passed", all}};
  stamp(report, start);
  return {std::move(report), all ? kExitOk : kExitClaimFailed};
}

}  // namespace turanlab::cli
