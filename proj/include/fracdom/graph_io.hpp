#pragma once

#include <string>

#include "fracdom/graph.hpp"
#include "json.hpp"

namespace fracdom {

// Edge-list text: one "u v" pair per line, optional "n N" header line for
// graphs whose vertex count exceeds max id + 1, '#' starts a comment.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// Standard graph6 line (printable ASCII, n <= 64 here).
Graph graph6_decode(const std::string& line);
std::string graph6_encode(const Graph& g);

// Auto-detects edge-list text vs a single graph6 line.
Graph parse_graph_text(const std::string& text);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace fracdom
