#include "turanlab_cli/report.hpp"

namespace turanlab::cli {

void to_json(Json& j, const RunReport& report) {
  j = Json{{"command", report.command},       {"params", report.params},   {"result", report.result},
           {"elapsed_ms", report.elapsed_ms}, {"version", report.version}};
  j["witnesses"] = report.witnesses ? *report.witnesses : Json(nullptr);
  j["oracle"] = report.oracle ? *report.oracle : Json(nullptr);
}

void from_json(const Json& j, RunReport& report) {
  j.at("command").get_to(report.command);
  report.params = j.at("params");
  report.result = j.at("result");
  j.at("elapsed_ms").get_to(report.elapsed_ms);
  j.at("version").get_to(report.version);
  report.witnesses.reset();
  report.oracle.reset();
  if (j.contains("witnesses") && !j["witnesses"].is_null()) report.witnesses = j["witnesses"];
  if (j.contains("oracle") && !j["oracle"].is_null()) report.oracle = j["oracle"];
}

std::string serialize(const RunReport& report) { return Json(report).dump(2); }

RunReport deserialize(const std::string& text) { return Json::parse(text).get<RunReport>(); }

std::string version_string() { return TURANLAB_VERSION; }

}  // namespace turanlab::cli
