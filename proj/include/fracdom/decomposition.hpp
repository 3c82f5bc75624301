#pragma once

#include <optional>
#include <vector>

#include "fracdom/configuration.hpp"
#include "json.hpp"

namespace fracdom {

std::vector<int> cut_vertices(const Graph& g);  // pre: connected; ascending ids

bool is_two_connected(const Graph& g);  // n >= 3, connected, no cut vertex

// A cycle of length 3 or >= 5 as a vertex sequence; absent exactly when every
// cycle of g has length 4. Pre: 2-connected.
std::optional<std::vector<int>> find_cycle_avoiding_length_4(const Graph& g);

// Grows the prescribed cycle by open ears (endpoints in the grown subgraph,
// internals fresh); the cycle and ears partition the edge set.
struct EarDecomposition {
  std::vector<int> cycle;
  std::vector<std::vector<int>> ears;
};
EarDecomposition open_ear_decomposition(const Graph& g, const std::vector<int>& start_cycle);
VerifyResult validate_ear_decomposition(const Graph& g, const EarDecomposition& ed);

// Either the graph is 2-connected, or it splits into two plates (connected,
// min degree >= 2 induced subgraphs) joined by a handle path whose internal
// vertices have degree 2. A one-vertex handle is a shared cut vertex.
struct StructureReport {
  bool two_connected = false;
  VertexSet plate1, plate2;
  std::vector<int> handle;
};
StructureReport dumbbell_decomposition(const Graph& g);  // pre: connected, min degree >= 2
VerifyResult validate_structure_report(const Graph& g, const StructureReport& rep);

// The maximal run of degree-2 vertices through v, extended both ways to the
// first vertices of other degree. Errors when the run closes a cycle.
std::vector<int> maximal_binary_path_through(const Graph& g, int v);

nlohmann::json structure_report_to_json(const StructureReport& rep);
nlohmann::json ear_decomposition_to_json(const EarDecomposition& ed);

}  // namespace fracdom
