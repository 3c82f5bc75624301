#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracdom/configuration.hpp"
#include "fracdom/graph.hpp"
#include "fracdom/graph_gen.hpp"
#include "fracdom/rational.hpp"

namespace fracdom {

inline constexpr int kOracleDefaultLimit = 12;
inline constexpr int kOracleHardCap = 16;

// Optimum of the fractional domatic LP together with an optimal weighting of
// minimal dominating sets (positive entries only, in column order).
struct FdValue {
  Rational fd;
  std::vector<std::pair<VertexSet, Rational>> weights;
};

// Solves max sum x_D over minimal dominating sets D subject to
// sum_{D containing v} x_D <= 1 for every vertex, x >= 0, in exact rational
// arithmetic. The simplex outcome is re-certified from scratch (primal
// feasibility, dual feasibility, strong duality) before being returned, so a
// defect in the solver surfaces as an exception rather than a wrong value.
// Rejects empty graphs and graphs with more than min(limit, kOracleHardCap)
// vertices.
FdValue exact_fd(const Graph& g, int limit = kOracleDefaultLimit);

// Clears denominators: with L the lcm of the weight denominators, every
// support set is repeated weight * L times, giving an (fd * L, L)
// configuration on g. Refuses L > 100000.
Configuration scaled_configuration(const Graph& g, const FdValue& v);

struct UnionCheck {
  Graph combined;
  Rational fd_a, fd_b, fd_union;
  bool min_rule_holds = false;
};

// The fractional domatic number of a disjoint union is the minimum over the
// parts; computes all three values exactly and compares.
UnionCheck fd_of_disjoint_union_check(const Graph& a, const Graph& b,
                                      int limit = kOracleHardCap);

struct ScanRecord {
  std::string graph6;
  Rational fd;
  bool flagged = false;  // 2 < fd < 7/3
};

struct ScanReport {
  std::vector<ScanRecord> records;
  std::vector<std::string> witnesses;  // graph6 strings of flagged graphs
  std::optional<Rational> min_above_two;
  long skipped = 0;  // stream entries over the oracle limit
};

// Runs the exact oracle over a graph stream, flagging every graph whose
// fractional domatic number lies strictly between 2 and 7/3.
ScanReport conjecture_scan(GraphStream stream, int oracle_limit = kOracleDefaultLimit);

}  // namespace fracdom
