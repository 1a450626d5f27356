#include "turanlab_cli/specs.hpp"

#include <cctype>
#include <fstream>
#include <regex>

#include "turanlab/errors.hpp"

namespace turanlab::cli {

FamilySpec parse_family_spec(const std::string& text) {
  static const std::regex clique(R"(K([2-5]))");
  static const std::regex core(R"(K_ell_r\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch match;
  if (std::regex_match(text, match, clique)) return complete_graph_pattern(std::stoi(match[1]));
  if (text == "P3") return path_pattern(3);
  if (text == "C4") return cycle_pattern(4);
  if (std::regex_match(text, match, core)) {
    const int ell = std::stoi(match[1]);
    const int r = std::stoi(match[2]);
    if (ell < 2 || r < 2) throw ArgumentError("K_ell_r: need ell >= 2 and r >= 2");
    return CoreFamily{ell, r};
  }
  std::ifstream in(text);
  if (!in) throw ArgumentError("unknown family '" + text + "' (not a builtin name or a readable file)");
  RGraph g = parse_hypergraph(in);
  if (g.edge_count() == 0) throw ArgumentError("hypergraph file '" + text + "' has no edges");
  return Pattern{text, std::move(g)};
}

std::vector<std::pair<int, int>> parse_kill_list(const std::string& text, int n) {
  std::vector<std::pair<int, int>> out;
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  if (cleaned.empty()) return out;
  static const std::regex pair(R"((\d+)-(\d+))");
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    const std::size_t comma = cleaned.find(',', start);
    const std::string item = cleaned.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::smatch match;
    if (!std::regex_match(item, match, pair)) throw ArgumentError("bad kill pair '" + item + "', expected a-b");
    const int a = std::stoi(match[1]);
    const int b = std::stoi(match[2]);
    if (a < 1 || b < 1 || a > n || b > n || a == b) {
      throw ArgumentError("kill pair " + item + " needs distinct endpoints in 1.." + std::to_string(n));
    }
    out.emplace_back(a - 1, b - 1);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

nlohmann::json vertex_list(VertexSet s) {
  auto out = nlohmann::json::array();
  for (int v : vertices_of(s)) out.push_back(v + 1);
  return out;
}

nlohmann::json edge_lists(const std::vector<VertexSet>& edges) {
  auto out = nlohmann::json::array();
  for (VertexSet e : edges) out.push_back(vertex_list(e));
  return out;
}

nlohmann::json support_edges(const EdgeUniverse& universe, Support s) {
  auto out = nlohmann::json::array();
  for (int e : s.elements()) out.push_back(vertex_list(universe.edge(e)));
  return out;
}

}  // namespace turanlab::cli
