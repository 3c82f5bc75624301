#include "fracdom/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace fracdom {

namespace {

VertexSet path_set(const std::vector<int>& path) {
  VertexSet s;
  for (int v : path) s.add(v);
  return s;
}

// Components of g restricted to `alive`, ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g, VertexSet alive) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int v : alive.members()) {
    if (seen.contains(v)) continue;
    VertexSet comp;
    comp.add(v);
    for (;;) {
      VertexSet grown = comp;
      for (int u : comp.members()) grown |= g.adj[u] & alive;
      if (grown == comp) break;
      comp = grown;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

}  // namespace

std::vector<int> cut_vertices(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("cut vertices of the empty graph are undefined");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("cut_vertices needs a connected graph");
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<char> cut(g.n, 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int u : g.adj[v].members()) {
      if (u == parent) continue;
      if (disc[u] == -1) {
        ++children;
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (parent != -1 && low[u] >= disc[v]) cut[v] = 1;
      } else {
        low[v] = std::min(low[v], disc[u]);
      }
    }
    if (parent == -1 && children > 1) cut[v] = 1;
  };
  dfs(0, -1);
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.n < 3) return false;
  if (connected_components(g).size() != 1) return false;
  return cut_vertices(g).empty();
}

std::optional<std::vector<int>> find_cycle_avoiding_length_4(const Graph& g) {
  if (!is_two_connected(g))
    throw std::invalid_argument("find_cycle_avoiding_length_4 needs a 2-connected graph");
  for (int u = 0; u < g.n; ++u)
    for (int v : (g.adj[u] - VertexSet::full(u + 1)).members()) {
      VertexSet common = (g.adj[u] & g.adj[v]) - VertexSet::full(v + 1);
      if (!common.empty()) return std::vector<int>{u, v, common.min()};
    }
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> path{s};
    VertexSet on;
    on.add(s);
    std::function<bool()> dfs = [&]() -> bool {
      int cur = path.back();
      for (int nb : g.adj[cur].members()) {
        if (nb == s && path.size() >= 5) return true;
        if (nb > s && !on.contains(nb)) {
          path.push_back(nb);
          on.add(nb);
          if (dfs()) return true;
          path.pop_back();
          on.drop(nb);
        }
      }
      return false;
    };
    if (dfs()) return path;
  }
  return std::nullopt;
}

EarDecomposition open_ear_decomposition(const Graph& g, const std::vector<int>& start_cycle) {
  if (!is_two_connected(g))
    throw std::invalid_argument("open_ear_decomposition needs a 2-connected graph");
  int m = static_cast<int>(start_cycle.size());
  if (m < 3 || path_set(start_cycle).count() != m)
    throw std::invalid_argument("start cycle must list at least 3 distinct vertices");
  for (int i = 0; i < m; ++i) {
    int u = start_cycle[i], v = start_cycle[(i + 1) % m];
    if (u < 0 || u >= g.n || !g.has_edge(u, v))
      throw std::invalid_argument("start cycle is not a cycle of the graph");
  }

  EarDecomposition ed;
  ed.cycle = start_cycle;
  std::vector<VertexSet> used(g.n);
  auto mark = [&](int u, int v) {
    used[u].add(v);
    used[v].add(u);
  };
  VertexSet grown = path_set(start_cycle);
  for (int i = 0; i < m; ++i) mark(start_cycle[i], start_cycle[(i + 1) % m]);

  for (;;) {
    int u = -1, w = -1;
    for (int v : grown.members()) {
      VertexSet free = g.adj[v] - used[v];
      if (!free.empty()) {
        u = v;
        w = free.min();
        break;
      }
    }
    if (u == -1) break;
    if (grown.contains(w)) {
      mark(u, w);
      ed.ears.push_back({u, w});
      continue;
    }
    // BFS from w through fresh vertices to any grown vertex other than u.
    std::vector<int> parent(g.n, -1);
    VertexSet visited;
    visited.add(w);
    std::deque<int> queue{w};
    int hit = -1, hit_from = -1;
    while (!queue.empty() && hit == -1) {
      int f = queue.front();
      queue.pop_front();
      for (int nb : g.adj[f].members()) {
        if (grown.contains(nb)) {
          if (nb != u) {
            hit = nb;
            hit_from = f;
            break;
          }
          continue;
        }
        if (!visited.contains(nb)) {
          visited.add(nb);
          parent[nb] = f;
          queue.push_back(nb);
        }
      }
    }
    if (hit == -1) throw std::logic_error("ear search found no return path");
    std::vector<int> inner;
    for (int v = hit_from; v != -1; v = parent[v]) inner.push_back(v);
    std::reverse(inner.begin(), inner.end());
    std::vector<int> ear{u};
    ear.insert(ear.end(), inner.begin(), inner.end());
    ear.push_back(hit);
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) mark(ear[i], ear[i + 1]);
    for (int v : inner) grown.add(v);
    ed.ears.push_back(std::move(ear));
  }

  VerifyResult check = validate_ear_decomposition(g, ed);
  if (!check.ok) throw std::logic_error("ear decomposition invalid: " + check.message);
  return ed;
}

VerifyResult validate_ear_decomposition(const Graph& g, const EarDecomposition& ed) {
  int m = static_cast<int>(ed.cycle.size());
  if (m < 3) return {false, "cycle shorter than 3"};
  for (int v : ed.cycle)
    if (v < 0 || v >= g.n) return {false, "cycle vertex outside the graph"};
  if (path_set(ed.cycle).count() != m) return {false, "cycle repeats a vertex"};
  std::vector<VertexSet> used(g.n);
  int used_count = 0;
  auto take = [&](int u, int v) -> bool {
    if (!g.has_edge(u, v) || used[u].contains(v)) return false;
    used[u].add(v);
    used[v].add(u);
    ++used_count;
    return true;
  };
  for (int i = 0; i < m; ++i)
    if (!take(ed.cycle[i], ed.cycle[(i + 1) % m]))
      return {false, "cycle edge " + std::to_string(ed.cycle[i]) + "-" +
                         std::to_string(ed.cycle[(i + 1) % m]) + " missing or reused"};
  VertexSet grown = path_set(ed.cycle);
  for (std::size_t e = 0; e < ed.ears.size(); ++e) {
    const auto& ear = ed.ears[e];
    std::string tag = "ear " + std::to_string(e);
    if (ear.size() < 2) return {false, tag + " shorter than one edge"};
    for (int v : ear)
      if (v < 0 || v >= g.n) return {false, tag + " leaves the graph"};
    if (path_set(ear).count() != static_cast<int>(ear.size()))
      return {false, tag + " repeats a vertex"};
    if (!grown.contains(ear.front()) || !grown.contains(ear.back()))
      return {false, tag + " endpoint not in the grown subgraph"};
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) {
      if (grown.contains(ear[i]))
        return {false, tag + " internal vertex " + std::to_string(ear[i]) + " already grown"};
    }
    for (std::size_t i = 0; i + 1 < ear.size(); ++i)
      if (!take(ear[i], ear[i + 1]))
        return {false, tag + " edge " + std::to_string(ear[i]) + "-" +
                           std::to_string(ear[i + 1]) + " missing or reused"};
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) grown.add(ear[i]);
  }
  if (!(grown == g.vertices())) return {false, "ears never reach every vertex"};
  if (used_count != g.edge_count()) return {false, "ears miss some edges"};
  return {true, ""};
}

std::vector<int> maximal_binary_path_through(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw std::invalid_argument("vertex outside the graph");
  if (g.degree(v) != 2)
    throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v)) + ", expected 2");
  auto nbs = g.adj[v].members();
  auto walk = [&](int first) {
    std::vector<int> seq;
    int prev = v, cur = first;
    while (g.degree(cur) == 2) {
      seq.push_back(cur);
      int next = (g.adj[cur] - VertexSet{}.add(prev)).min();
      if (next == v)
        throw std::invalid_argument("the degree-2 run through vertex " + std::to_string(v) +
                                    " closes a cycle");
      prev = cur;
      cur = next;
    }
    seq.push_back(cur);
    return seq;
  };
  std::vector<int> left = walk(nbs[0]), right = walk(nbs[1]);
  std::vector<int> path(left.rbegin(), left.rend());
  path.push_back(v);
  path.insert(path.end(), right.begin(), right.end());
  if (path.front() == path.back())
    throw std::invalid_argument("the degree-2 run through vertex " + std::to_string(v) +
                                " closes a cycle at vertex " + std::to_string(path.front()));
  return path;
}

StructureReport dumbbell_decomposition(const Graph& g) {
  if (g.n == 0 || connected_components(g).size() != 1 || min_degree(g) < 2)
    throw std::invalid_argument(
        "dumbbell decomposition needs a connected graph with min degree >= 2");
  StructureReport rep;
  auto cuts = cut_vertices(g);
  if (cuts.empty()) {
    rep.two_connected = true;
    return rep;
  }
  int binary_cut = -1;
  for (int v : cuts)
    if (g.degree(v) == 2) {
      binary_cut = v;
      break;
    }
  if (binary_cut != -1) {
    rep.handle = maximal_binary_path_through(g, binary_cut);
    VertexSet internals = path_set(rep.handle);
    internals.drop(rep.handle.front()).drop(rep.handle.back());
    auto comps = components_within(g, g.vertices() - internals);
    if (comps.size() != 2) throw std::logic_error("handle removal split the graph oddly");
    bool front_first = comps[0].contains(rep.handle.front());
    rep.plate1 = front_first ? comps[0] : comps[1];
    rep.plate2 = front_first ? comps[1] : comps[0];
  } else {
    int v = cuts.front();
    auto comps = components_within(g, g.vertices() - VertexSet{}.add(v));
    int unique_nb = -1;
    VertexSet side;
    for (const auto& comp : comps) {
      VertexSet touching = g.adj[v] & comp;
      if (touching.count() == 1) {
        unique_nb = touching.min();
        side = comp;
        break;
      }
    }
    if (unique_nb != -1) {
      rep.handle = {unique_nb, v};
      rep.plate1 = side;
      rep.plate2 = g.vertices() - side;
    } else {
      rep.handle = {v};
      rep.plate1 = comps.front();
      rep.plate1.add(v);
      rep.plate2 = (g.vertices() - comps.front());
    }
  }
  VerifyResult check = validate_structure_report(g, rep);
  if (!check.ok) throw std::logic_error("dumbbell decomposition invalid: " + check.message);
  return rep;
}

VerifyResult validate_structure_report(const Graph& g, const StructureReport& rep) {
  if (rep.two_connected) {
    if (!rep.plate1.empty() || !rep.plate2.empty() || !rep.handle.empty())
      return {false, "2-connected report carries dumbbell parts"};
    if (!is_two_connected(g)) return {false, "graph is not 2-connected"};
    return {true, ""};
  }
  if (rep.handle.empty()) return {false, "dumbbell handle is empty"};
  for (int v : rep.handle)
    if (v < 0 || v >= g.n) return {false, "handle leaves the graph"};
  VertexSet hset = path_set(rep.handle);
  if (hset.count() != static_cast<int>(rep.handle.size()))
    return {false, "handle repeats a vertex"};
  for (std::size_t i = 0; i + 1 < rep.handle.size(); ++i)
    if (!g.has_edge(rep.handle[i], rep.handle[i + 1]))
      return {false, "handle edge " + std::to_string(rep.handle[i]) + "-" +
                         std::to_string(rep.handle[i + 1]) + " missing"};
  for (std::size_t i = 1; i + 1 < rep.handle.size(); ++i)
    if (g.degree(rep.handle[i]) != 2)
      return {false, "handle internal vertex " + std::to_string(rep.handle[i]) +
                         " has degree " + std::to_string(g.degree(rep.handle[i]))};
  int x = rep.handle.front(), y = rep.handle.back();
  if (!rep.plate1.subset_of(g.vertices()) || !rep.plate2.subset_of(g.vertices()))
    return {false, "plate leaves the graph"};
  if (!((rep.plate1 & hset) == VertexSet{}.add(x)))
    return {false, "plate 1 must meet the handle exactly at its front"};
  if (!((rep.plate2 & hset) == VertexSet{}.add(y)))
    return {false, "plate 2 must meet the handle exactly at its back"};
  if (rep.handle.size() >= 2 && !(rep.plate1 & rep.plate2).empty())
    return {false, "plates overlap"};
  if (!((rep.plate1 | rep.plate2 | hset) == g.vertices()))
    return {false, "plates and handle miss some vertices"};
  for (int side = 0; side < 2; ++side) {
    VertexSet plate = side == 0 ? rep.plate1 : rep.plate2;
    std::string tag = "plate " + std::to_string(side + 1);
    auto sub = induced_subgraph(g, plate);
    if (sub.graph.n < 3) return {false, tag + " has fewer than 3 vertices"};
    if (connected_components(sub.graph).size() != 1) return {false, tag + " is disconnected"};
    if (min_degree(sub.graph) < 2) return {false, tag + " has a vertex of degree < 2"};
  }
  int plate_edges = induced_subgraph(g, rep.plate1).graph.edge_count() +
                    induced_subgraph(g, rep.plate2).graph.edge_count();
  if (plate_edges + static_cast<int>(rep.handle.size()) - 1 != g.edge_count())
    return {false, "plates and handle do not partition the edges"};
  return {true, ""};
}

nlohmann::json structure_report_to_json(const StructureReport& rep) {
  if (rep.two_connected) return {{"variant", "two-connected"}};
  return {{"variant", "dumbbell"},
          {"plate1", rep.plate1.members()},
          {"plate2", rep.plate2.members()},
          {"handle", rep.handle}};
}

nlohmann::json ear_decomposition_to_json(const EarDecomposition& ed) {
  return {{"cycle", ed.cycle}, {"ears", ed.ears}};
}

}  // namespace fracdom
