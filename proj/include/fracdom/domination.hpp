#pragma once

#include <utility>
#include <vector>

#include "fracdom/graph.hpp"

namespace fracdom {

inline constexpr int kEnumerationLimit = 16;

// d together with its neighbors covers every vertex.
bool is_dominating(const Graph& g, VertexSet d);

// Dominating and no proper subset dominates (equivalently no one-vertex removal does).
bool is_minimal_dominating(const Graph& g, VertexSet d);

// All minimal dominating sets, ordered by ascending bitmask. Rejects graphs
// with more than `limit` vertices.
std::vector<VertexSet> enumerate_minimal_dominating_sets(const Graph& g,
                                                         int limit = kEnumerationLimit);

// Lowest-id-first greedy; maximal independent sets are dominating.
VertexSet greedy_maximal_independent_set(const Graph& g);

// A maximal independent set and its complement: two disjoint dominating sets
// covering all vertices. Needs min degree >= 1.
std::pair<VertexSet, VertexSet> disjoint_dominating_pair(const Graph& g);

}  // namespace fracdom
