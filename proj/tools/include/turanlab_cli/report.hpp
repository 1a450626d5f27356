#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace turanlab::cli {

using Json = nlohmann::json;

// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailed = 2,
  kExitScaleGuard = 3,
  kExitBadInput = 4,
};

struct RunReport {
  std::string command;
  Json params = Json::object();
  Json result = Json::object();
  std::optional<Json> witnesses;
  std::optional<Json> oracle;
  std::int64_t elapsed_ms = 0;
  std::string version;

  bool operator==(const RunReport&) const = default;
};

void to_json(Json& j, const RunReport& report);
void from_json(const Json& j, RunReport& report);

std::string serialize(const RunReport& report);
RunReport deserialize(const std::string& text);

struct CommandOutcome {
  RunReport report;
  int exit_code = kExitOk;
};

std::string version_string();

}  // namespace turanlab::cli
