#include "fracdom/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracdom {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : (adj[u] - VertexSet::full(u + 1)).members()) out.emplace_back(u, v);
  return out;
}

Graph from_edge_list(const std::vector<std::pair<int, int>>& edges,
                     std::optional<int> n) {
  int count = n.value_or(0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0) throw std::invalid_argument("negative vertex id");
    count = std::max({count, u + 1, v + 1});
  }
  if (count > kMaxVertices)
    throw std::invalid_argument("graph needs " + std::to_string(count) +
                                " vertices, limit is 64");
  if (n && *n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n = count;
  g.adj.assign(count, {});
  for (auto [u, v] : edges) {
    if (n && (u >= *n || v >= *n))
      throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " outside a graph on " + std::to_string(*n) + " vertices");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (g.has_edge(u, v))
      throw std::invalid_argument("duplicate edge " + std::to_string(std::min(u, v)) + "-" +
                                  std::to_string(std::max(u, v)));
    g.adj[u].add(v);
    g.adj[v].add(u);
  }
  return g;
}

int min_degree(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("minimum degree of the empty graph is undefined");
  int best = kMaxVertices;
  for (int v = 0; v < g.n; ++v) best = std::min(best, g.degree(v));
  return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int v = 0; v < g.n; ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp;
    comp.add(v);
    for (;;) {
      VertexSet grown = comp;
      for (int u : comp.members()) grown |= g.adj[u];
      if (grown == comp) break;
      comp = grown;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.subset_of(g.vertices()))
    throw std::invalid_argument("induced set " + to_string(keep) + " not within the graph");
  InducedSubgraph out;
  out.parent_ids = keep.members();
  out.graph.n = static_cast<int>(out.parent_ids.size());
  out.graph.adj.assign(out.graph.n, {});
  for (int a = 0; a < out.graph.n; ++a)
    for (int b = a + 1; b < out.graph.n; ++b)
      if (g.has_edge(out.parent_ids[a], out.parent_ids[b])) {
        out.graph.adj[a].add(b);
        out.graph.adj[b].add(a);
      }
  return out;
}

std::optional<int> recognize_cycle(const Graph& g) {
  if (g.n < 3) return std::nullopt;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  if (connected_components(g).size() != 1) return std::nullopt;
  return g.n;
}

std::optional<BipartitionK2p> recognize_k2p(const Graph& g) {
  if (g.n < 4) return std::nullopt;
  int want = g.n - 2;
  for (int a1 = 0; a1 < g.n; ++a1) {
    if (g.degree(a1) != want) continue;
    for (int a2 = a1 + 1; a2 < g.n; ++a2) {
      if (g.degree(a2) != want || g.has_edge(a1, a2)) continue;
      VertexSet pair;
      pair.add(a1).add(a2);
      VertexSet b = g.vertices() - pair;
      bool ok = true;
      for (int v : b.members())
        if (!(g.adj[v] == pair)) {
          ok = false;
          break;
        }
      if (ok) return BipartitionK2p{a1, a2, b};
    }
  }
  return std::nullopt;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.n + b.n > kMaxVertices)
    throw std::invalid_argument("union needs " + std::to_string(a.n + b.n) +
                                " vertices, limit is 64");
  Graph g;
  g.n = a.n + b.n;
  g.adj.assign(g.n, {});
  for (int v = 0; v < a.n; ++v) g.adj[v] = a.adj[v];
  for (int v = 0; v < b.n; ++v) g.adj[a.n + v] = VertexSet{b.adj[v].bits << a.n};
  return g;
}

}  // namespace fracdom
