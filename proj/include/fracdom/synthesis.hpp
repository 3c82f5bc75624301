#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracdom/configuration.hpp"
#include "fracdom/decomposition.hpp"

namespace fracdom {

// The standard cycle family on the canonical C_n (edges i to i+1 mod n):
// the three residue classes when 3 divides n (value 3), otherwise the n
// rotations of {0, 3, 6, ...} (value 3n/(n+2) or 3n/(n+1)).
Configuration cycle_configuration(int n);

// Splices a configuration of g minus the ear internals, nice at the ear's
// endpoints, along the ear: internals join the sets by residue class. An ear
// without internals rebinds the configuration unchanged.
Configuration ear_extend(const Configuration& c, const Graph& g, const std::vector<int>& ear);

// (7,3) for two 4-cycle plates joined by a handle, straight from the
// residue-class table.
Configuration dumbbell_c4c4(const Graph& g, const StructureReport& rep);

// Plate 1 a 4-cycle, plate 2 any plate carrying a (2k+1, k)-configuration
// with k >= 3; yields (2k+1, k) on the whole graph.
Configuration dumbbell_c4h(const Graph& g, const StructureReport& rep,
                           const Configuration& plate2_config);

// Plates carrying (2r+1, r)- and (2k+1, k)-configurations, r >= k >= 2;
// yields (2r+1, r) on the whole graph.
Configuration dumbbell_h1h2(const Graph& g, const StructureReport& rep,
                            const Configuration& c1, const Configuration& c2);

// (3p-2, p) on the canonical K_{2,p} (parts {0,1} and {2..p+1}), p >= 2.
Configuration k2p_configuration(int p);

// A verified configuration of value > 2 for any 2-connected graph except C4.
Configuration two_connected_synthesis(const Graph& g);

enum class Verdict { FdOne, FdTwo, FdAboveTwo };

std::string verdict_name(Verdict v);

struct Classification {
  Verdict verdict = Verdict::FdOne;
  std::string reason;                        // isolated-vertex | degree-one-vertex |
                                             // c4-component | none
  std::vector<int> witness;                  // offending vertex or component
  std::optional<Configuration> certificate;  // present exactly when FD > 2
};

// Total for every graph with at least one vertex; the FdAboveTwo verdict
// always carries a verified certificate.
Classification classify(const Graph& g);

nlohmann::json classification_to_json(const Classification& c, bool include_certificate);

}  // namespace fracdom
