#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "turanlab_cli/report.hpp"

namespace turanlab::cli {

CommandOutcome cmd_verify_counterexample(int ell, int n);
CommandOutcome cmd_ex(int n, const std::string& forbid, bool oracle, int threads);
CommandOutcome cmd_gen_ex(int n, const std::string& target, const std::string& forbid, bool oracle, int threads);
CommandOutcome cmd_hilbert(int n, const std::string& kill, std::optional<int> degree, std::optional<int> q);
CommandOutcome cmd_symmetrize(int n, int q, int r, const std::string& kill);
CommandOutcome cmd_alpha(int n, const std::string& forbid, const std::optional<std::string>& target);

struct CodegreeStarRequest {
  int n = 0;
  int ell = 0;
  int r = 0;
  bool verify_collapse = false;
  bool alpha = false;
  bool oracle = false;
  std::int64_t samples = 20000;
  std::uint64_t seed = 1;
  int threads = 1;
};

CommandOutcome cmd_codegree_star(const CodegreeStarRequest& request);
CommandOutcome cmd_selftest(std::optional<int> criterion, int threads, std::uint64_t seed);

// Runs `body`, mapping library exceptions to exit codes with an error
// report: scale guards to 3, bad arguments and preconditions to 4.
CommandOutcome guarded(const std::string& command, const std::function<CommandOutcome()>& body);

CommandOutcome error_outcome(const std::string& command, int exit_code, const std::string& message);

}  // namespace turanlab::cli
