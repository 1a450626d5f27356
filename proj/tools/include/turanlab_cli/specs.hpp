#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "turanlab/hypergraph.hpp"

namespace turanlab::cli {

// K2, K3, K4, K5, P3, C4 and K_ell_r(l,r); anything else is read as a
// hypergraph file.
FamilySpec parse_family_spec(const std::string& text);

// "1-2,3-4" (1-based, whitespace ignored) to 0-based pairs. Empty text is
// the empty list.
std::vector<std::pair<int, int>> parse_kill_list(const std::string& text, int n);

// 1-based vertex lists.
nlohmann::json vertex_list(VertexSet s);
nlohmann::json edge_lists(const std::vector<VertexSet>& edges);
nlohmann::json support_edges(const EdgeUniverse& universe, Support s);

}  // namespace turanlab::cli
