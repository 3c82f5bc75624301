#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fracdom/graph.hpp"
#include "fracdom/rational.hpp"
#include "json.hpp"

namespace fracdom {

// A (k, s)-configuration: k dominating sets of the bound graph, every vertex
// in at most s of them. Witnesses a fractional domatic number of at least k/s.
struct Configuration {
  std::shared_ptr<const Graph> g;
  std::vector<VertexSet> sets;
  int s = 0;

  int k() const { return static_cast<int>(sets.size()); }
};

struct VerifyResult {
  bool ok = false;
  std::string message;
};

// Checks every invariant; the message names the first failing set or
// over-covered vertex.
VerifyResult verify(const Configuration& c);

Rational value(const Configuration& c);  // k/s in lowest terms

// r when c is (2r+1, r)-shaped, -1 otherwise.
int odd_shape_rank(const Configuration& c);

// (k1+k2, s1+s2) on the same graph.
Configuration combine(const Configuration& a, const Configuration& b);

// Reshapes a configuration of value > 2 into (2*target_k+1, target_k): keeps
// the first 2s+1 sets, then appends disjoint dominating pairs.
Configuration normalize_to_odd(const Configuration& c, int target_k);

// Set indices (ascending) holding exactly x, exactly y, both, neither.
struct PairSplit {
  std::vector<int> with_x, with_y, with_both, with_neither;
};
PairSplit split_by_pair(const Configuration& c, int x, int y);

// (2r+1, r)-shaped, x and y each in exactly r sets, and the x-only, y-only
// and both parts of the split all nonempty.
bool is_nice(const Configuration& c, int x, int y);

// (2k+1, k) -> (4k+3, 2k+1): the extra dominating set followed by every
// original set twice, in order.
Configuration double_plus_set(const Configuration& c, VertexSet extra);

// Rewrites a (2k+1, k)-configuration into one that is nice at (x, y),
// escalating through double_plus_set when the pair split is degenerate.
Configuration make_nice(const Configuration& c, int x, int y);

nlohmann::json configuration_to_json(const Configuration& c);

// Structural parse only: shape, bounds and field types. Semantic checks
// (domination, coverage, declared value) belong to verify.
Configuration configuration_from_json(const nlohmann::json& j);

// Parse (throws on malformed input), then verify, then compare the declared
// value against k/s.
VerifyResult verify_certificate_json(const nlohmann::json& j);

}  // namespace fracdom
