#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fracdom {

inline constexpr int kMaxVertices = 64;

// Vertex subset of a graph on at most 64 vertices, one bit per vertex.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet full(int n) {
    return {n >= 64 ? ~0ull : (1ull << n) - 1};
  }
  bool contains(int v) const { return (bits >> v) & 1u; }
  VertexSet& add(int v) {
    bits |= 1ull << v;
    return *this;
  }
  VertexSet& drop(int v) {
    bits &= ~(1ull << v);
    return *this;
  }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  int min() const { return bits ? std::countr_zero(bits) : -1; }
  std::vector<int> members() const;

  friend VertexSet operator|(VertexSet a, VertexSet b) { return {a.bits | b.bits}; }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return {a.bits & b.bits}; }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return {a.bits & ~b.bits}; }
  VertexSet& operator|=(VertexSet o) {
    bits |= o.bits;
    return *this;
  }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }
};

std::string to_string(VertexSet s);

// Simple undirected graph, adjacency stored as one VertexSet row per vertex.
struct Graph {
  int n = 0;
  std::vector<VertexSet> adj;

  bool has_edge(int u, int v) const { return adj[u].contains(v); }
  int degree(int v) const { return adj[v].count(); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::full(n); }
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n == b.n && a.adj == b.adj;
  }
};

// Vertex count defaults to max endpoint + 1. Rejects loops, duplicate edges,
// endpoints outside [0, n), and n > 64.
Graph from_edge_list(const std::vector<std::pair<int, int>>& edges,
                     std::optional<int> n = std::nullopt);

int min_degree(const Graph& g);  // error on the empty graph

// Vertex sets of the components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// parent_ids[local] = vertex id in the parent graph; ids ascend.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> parent_ids;
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

// n when g is the cycle C_n (connected, 2-regular, n >= 3), absent otherwise.
std::optional<int> recognize_cycle(const Graph& g);

// Complete bipartite K_{2,p} with parts {a1,a2} and b, p = |b| >= 2.
struct BipartitionK2p {
  int a1 = -1;
  int a2 = -1;
  VertexSet b;
  int p() const { return b.count(); }
};
std::optional<BipartitionK2p> recognize_k2p(const Graph& g);

// b's vertices are shifted up by a.n.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace fracdom
