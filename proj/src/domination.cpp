#include "fracdom/domination.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracdom {

namespace {

VertexSet closed_neighborhood(const Graph& g, VertexSet d) {
  VertexSet covered = d;
  for (int v : d.members()) covered |= g.adj[v];
  return covered;
}

void collect_minimal_candidates(const Graph& g, VertexSet cur, VertexSet covered,
                                std::vector<std::uint64_t>& out) {
  if (covered == g.vertices()) {
    out.push_back(cur.bits);
    return;
  }
  int v = (g.vertices() - covered).min();
  VertexSet choices = g.adj[v];
  choices.add(v);
  for (int u : choices.members())
    collect_minimal_candidates(g, VertexSet(cur).add(u),
                               covered | g.adj[u] | VertexSet{}.add(u), out);
}

}  // namespace

bool is_dominating(const Graph& g, VertexSet d) {
  if (!d.subset_of(g.vertices()))
    throw std::invalid_argument("set " + to_string(d) + " not within the graph");
  return closed_neighborhood(g, d) == g.vertices();
}

bool is_minimal_dominating(const Graph& g, VertexSet d) {
  if (!is_dominating(g, d)) return false;
  for (int v : d.members())
    if (is_dominating(g, VertexSet(d).drop(v))) return false;
  return true;
}

std::vector<VertexSet> enumerate_minimal_dominating_sets(const Graph& g, int limit) {
  limit = std::min(limit, kEnumerationLimit);
  if (g.n > limit)
    throw std::invalid_argument("graph has " + std::to_string(g.n) +
                                " vertices, enumeration limited to " + std::to_string(limit));
  std::vector<std::uint64_t> candidates;
  collect_minimal_candidates(g, {}, {}, candidates);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<VertexSet> out;
  for (std::uint64_t bits : candidates)
    if (is_minimal_dominating(g, VertexSet{bits})) out.push_back(VertexSet{bits});
  return out;
}

VertexSet greedy_maximal_independent_set(const Graph& g) {
  VertexSet chosen, blocked;
  for (int v = 0; v < g.n; ++v) {
    if (blocked.contains(v)) continue;
    chosen.add(v);
    blocked |= g.adj[v];
    blocked.add(v);
  }
  return chosen;
}

std::pair<VertexSet, VertexSet> disjoint_dominating_pair(const Graph& g) {
  if (g.n == 0 || min_degree(g) < 1)
    throw std::invalid_argument("disjoint dominating pair needs min degree >= 1");
  VertexSet mis = greedy_maximal_independent_set(g);
  VertexSet rest = g.vertices() - mis;
  if (!is_dominating(g, mis) || !is_dominating(g, rest))
    throw std::logic_error("independent set split failed to dominate");
  return {mis, rest};
}

}  // namespace fracdom
