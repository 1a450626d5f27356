#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "turanlab_cli/commands.hpp"

namespace {

using turanlab::cli::CommandOutcome;

// Optional copy of every report under $TURANLAB_REPORT_DIR/<command>.json.
void save_report(const CommandOutcome& outcome) {
  const char* dir = std::getenv("TURANLAB_REPORT_DIR");
  if (dir == nullptr || *dir == '\0') return;
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / (outcome.report.command + ".json"));
  out << turanlab::cli::serialize(outcome.report) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = turanlab::cli;
  CLI::App app{"Exact checks for Turán-type statements through monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", cli::version_string());

  int threads = 1;
  app.add_option("--threads", threads, "worker threads for exhaustive searches")->check(CLI::Range(1, 256));

  std::function<CommandOutcome()> run;

  int ell = 0;
  int n = 0;
  int q = 0;
  int r = 0;
  std::string forbid;
  std::string target;
  std::string kill;
  bool oracle = false;
  std::optional<int> degree;
  std::optional<int> hilbert_q;
  std::optional<int> criterion;
  std::uint64_t seed = 20240601;

  auto* verify = app.add_subcommand("verify-counterexample", "check F_{n,ell} in DI(n,ell) below the generator degree");
  verify->add_option("--ell", ell)->required();
  verify->add_option("--n", n)->required();
  verify->callback([&] { run = [&] { return cli::cmd_verify_counterexample(ell, n); }; });

  auto* ex = app.add_subcommand("ex", "Turan number via the cover ideal");
  ex->add_option("--n", n)->required();
  ex->add_option("--forbid", forbid, "builtin name or hypergraph file")->required();
  ex->add_flag("--oracle", oracle, "cross-check by exhaustive search");
  ex->callback([&] { run = [&] { return cli::cmd_ex(n, forbid, oracle, threads); }; });

  auto* gen_ex = app.add_subcommand("gen-ex", "generalized Turan number via the cover ideal");
  gen_ex->add_option("--n", n)->required();
  gen_ex->add_option("--target", target)->required();
  gen_ex->add_option("--forbid", forbid)->required();
  gen_ex->add_flag("--oracle", oracle, "cross-check by exhaustive search");
  gen_ex->callback([&] { run = [&] { return cli::cmd_gen_ex(n, target, forbid, oracle, threads); }; });

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a square-zero quotient");
  hilbert->add_option("--n", n)->required();
  hilbert->add_option("--kill", kill, "pairs like 1-2,3-4");
  hilbert->add_option("--d", degree);
  hilbert->add_option("--q", hilbert_q, "check A_{q+1} = 0 and the Turan bound at d");
  hilbert->callback([&] { run = [&] { return cli::cmd_hilbert(n, kill, degree, hilbert_q); }; });

  auto* symmetrize = app.add_subcommand("symmetrize", "clone parallel classes until the quotient is partite");
  symmetrize->add_option("--n", n)->required();
  symmetrize->add_option("--q", q)->required();
  symmetrize->add_option("--r", r)->required();
  symmetrize->add_option("--kill", kill, "pairs like 1-2,3-4");
  symmetrize->callback([&] { run = [&] { return cli::cmd_symmetrize(n, q, r, kill); }; });

  auto* alpha = app.add_subcommand("alpha", "initial degree of the cover ideal (or alpha_T with --target)");
  alpha->add_option("--n", n)->required();
  alpha->add_option("--forbid", forbid)->required();
  auto* alpha_target = alpha->add_option("--target", target);
  alpha->callback([&] {
    run = [&] {
      return cli::cmd_alpha(n, forbid, alpha_target->count() > 0 ? std::optional<std::string>(target) : std::nullopt);
    };
  });

  cli::CodegreeStarRequest star;
  auto* codegree = app.add_subcommand("codegree-star", "the missing codegree-star ideal J^(r)_{n,ell}");
  codegree->add_option("--n", star.n)->required();
  codegree->add_option("--ell", star.ell)->required();
  codegree->add_option("--r", star.r)->required();
  codegree->add_flag("--verify-collapse", star.verify_collapse);
  codegree->add_flag("--alpha", star.alpha);
  codegree->add_flag("--oracle", star.oracle, "brute-force ex(n, K_ell^(r))");
  codegree->add_option("--samples", star.samples, "random supports when exhaustion is too large");
  codegree->add_option("--seed", star.seed);
  codegree->callback([&] {
    star.threads = threads;
    run = [&] { return cli::cmd_codegree_star(star); };
  });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--criterion", criterion)->check(CLI::Range(1, 10));
  selftest->add_option("--seed", seed);
  selftest->callback([&] { run = [&] { return cli::cmd_selftest(criterion, threads, seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitBadInput;
  }

  const CommandOutcome outcome = cli::guarded(app.get_subcommands().front()->get_name(), run);
  std::cout << cli::serialize(outcome.report) << '\n';
  save_report(outcome);
  if (outcome.exit_code != cli::kExitOk && outcome.report.result.contains("error")) {
    std::cerr << "turanlab: " << outcome.report.result["error"].get<std::string>() << '\n';
  }
  return outcome.exit_code;
}
