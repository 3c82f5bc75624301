#include "fracdom/synthesis.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "fracdom/domination.hpp"

namespace fracdom {

namespace {

std::shared_ptr<const Graph> shared(Graph g) {
  return std::make_shared<Graph>(std::move(g));
}

Graph canonical_cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_edge_list(edges);
}

void ensure_valid(const Configuration& c, const char* who) {
  VerifyResult r = verify(c);
  if (!r.ok)
    throw std::logic_error(std::string(who) + " produced an invalid configuration: " +
                           r.message);
}

void require_valid(const Configuration& c, const char* who) {
  VerifyResult r = verify(c);
  if (!r.ok)
    throw std::invalid_argument(std::string(who) + ": invalid configuration: " + r.message);
}

int require_odd_rank(const Configuration& c, int least, const char* who) {
  int r = odd_shape_rank(c);
  if (r < least)
    throw std::invalid_argument(std::string(who) + ": needs a (2r+1, r)-shaped configuration with r >= " +
                                std::to_string(least));
  return r;
}

// Add v to the lowest-index sets lacking it until it sits in exactly `target`.
void pad_vertex(std::vector<VertexSet>& sets, int v, int target, const char* who) {
  int have = 0;
  for (const auto& d : sets) have += d.contains(v);
  if (have > target)
    throw std::logic_error(std::string(who) + ": vertex already above the padding target");
  for (auto& d : sets) {
    if (have == target) break;
    if (!d.contains(v)) {
      d.add(v);
      ++have;
    }
  }
  if (have != target)
    throw std::logic_error(std::string(who) + ": not enough sets to pad into");
}

std::vector<int> balanced_sizes(int total, int parts) {
  std::vector<int> out(parts, total / parts);
  for (int i = 0; i < total % parts; ++i) ++out[i];
  return out;
}

// Slices `indices` into consecutive groups of the given sizes.
std::vector<std::vector<int>> slice(const std::vector<int>& indices,
                                    const std::vector<int>& sizes) {
  std::vector<std::vector<int>> out;
  std::size_t at = 0;
  for (int size : sizes) {
    out.emplace_back(indices.begin() + at, indices.begin() + at + size);
    at += size;
  }
  if (at != indices.size()) throw std::logic_error("partition sizes do not add up");
  return out;
}

std::vector<VertexSet> lift_sets(const std::vector<VertexSet>& sets,
                                 const std::vector<int>& to_parent) {
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (const auto& d : sets) {
    VertexSet t;
    for (int v : d.members()) t.add(to_parent[v]);
    out.push_back(t);
  }
  return out;
}

void require_dumbbell(const Graph& g, const StructureReport& rep, const char* who) {
  if (rep.two_connected)
    throw std::invalid_argument(std::string(who) + ": report is not a dumbbell");
  VerifyResult r = validate_structure_report(g, rep);
  if (!r.ok)
    throw std::invalid_argument(std::string(who) + ": invalid structure report: " + r.message);
}

// Antipode and the two attachment neighbors (lower id first) of `attach`
// within a 4-cycle plate.
std::array<int, 3> c4_labels(const Graph& g, VertexSet plate, int attach) {
  VertexSet nbs = g.adj[attach] & plate;
  int b = nbs.min();
  int c = (nbs - VertexSet{}.add(b)).min();
  int a = (plate - nbs - VertexSet{}.add(attach)).min();
  return {a, b, c};
}

StructureReport swapped(const StructureReport& rep) {
  StructureReport out;
  out.plate1 = rep.plate2;
  out.plate2 = rep.plate1;
  out.handle.assign(rep.handle.rbegin(), rep.handle.rend());
  return out;
}

}  // namespace

Configuration cycle_configuration(int n) {
  if (n < 3) throw std::invalid_argument("cycle_configuration needs n >= 3");
  if (n > kMaxVertices) throw std::invalid_argument("cycle_configuration limited to n <= 64");
  Configuration c;
  c.g = shared(canonical_cycle(n));
  if (n % 3 == 0) {
    c.s = 1;
    for (int a = 0; a < 3; ++a) {
      VertexSet d;
      for (int v = a; v < n; v += 3) d.add(v);
      c.sets.push_back(d);
    }
  } else {
    int t = (n + 2) / 3;
    c.s = t;
    for (int rot = 0; rot < n; ++rot) {
      VertexSet d;
      for (int j = 0; j < t; ++j) d.add((3 * j + rot) % n);
      c.sets.push_back(d);
    }
  }
  ensure_valid(c, "cycle_configuration");
  return c;
}

Configuration ear_extend(const Configuration& c, const Graph& g, const std::vector<int>& ear) {
  require_valid(c, "ear_extend");
  if (ear.size() < 2) throw std::invalid_argument("ear_extend: ear needs at least two vertices");
  VertexSet seen;
  for (int v : ear) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("ear_extend: ear leaves the graph");
    if (seen.contains(v)) throw std::invalid_argument("ear_extend: ear repeats a vertex");
    seen.add(v);
  }
  for (std::size_t i = 0; i + 1 < ear.size(); ++i)
    if (!g.has_edge(ear[i], ear[i + 1]))
      throw std::invalid_argument("ear_extend: ear edge " + std::to_string(ear[i]) + "-" +
                                  std::to_string(ear[i + 1]) + " missing from the graph");
  int s_len = static_cast<int>(ear.size()) - 2;
  for (int i = 1; i <= s_len; ++i)
    if (g.degree(ear[i]) != 2)
      throw std::invalid_argument("ear_extend: internal vertex " + std::to_string(ear[i]) +
                                  " has degree " + std::to_string(g.degree(ear[i])));
  int r = require_odd_rank(c, 1, "ear_extend");

  if (s_len == 0) {
    if (c.g->n != g.n)
      throw std::invalid_argument("ear_extend: rebinding needs the same vertex count");
    for (int v = 0; v < g.n; ++v)
      if (!c.g->adj[v].subset_of(g.adj[v]))
        throw std::invalid_argument("ear_extend: target graph lacks edges of the bound graph");
    if (!is_nice(c, ear.front(), ear.back()))
      throw std::invalid_argument("ear_extend: configuration is not nice at the ear endpoints");
    Configuration out{shared(g), c.sets, c.s};
    ensure_valid(out, "ear_extend");
    return out;
  }

  VertexSet internals;
  for (int i = 1; i <= s_len; ++i) internals.add(ear[i]);
  auto sub = induced_subgraph(g, g.vertices() - internals);
  if (!(sub.graph == *c.g))
    throw std::invalid_argument(
        "ear_extend: configuration is not bound to the graph minus the ear internals");
  std::vector<int> local(g.n, -1);
  for (int i = 0; i < sub.graph.n; ++i) local[sub.parent_ids[i]] = i;
  int lx = local[ear.front()], ly = local[ear.back()];
  if (!is_nice(c, lx, ly))
    throw std::invalid_argument("ear_extend: configuration is not nice at the ear endpoints");

  VertexSet R[3];
  for (int i = 1; i <= s_len; ++i) R[i % 3].add(ear[i]);
  PairSplit parts = split_by_pair(c, lx, ly);
  std::vector<VertexSet> out_sets = lift_sets(c.sets, sub.parent_ids);
  auto splice = [&](const std::vector<int>& group, const VertexSet& residue) {
    for (int i : group) out_sets[i] |= residue;
  };
  switch (s_len % 3) {
    case 0:
      splice(parts.with_x, R[0]);
      splice(parts.with_y, R[1]);
      splice(parts.with_neither, R[2]);
      splice(parts.with_both, R[0]);
      break;
    case 1:
      splice(parts.with_x, R[0]);
      splice(parts.with_neither, R[1]);
      splice(parts.with_y, R[2]);
      splice(parts.with_both, R[0]);
      break;
    case 2: {
      splice(parts.with_both, R[0]);
      splice(parts.with_x, R[1]);
      splice(parts.with_y, R[2]);
      int take = std::min(r - static_cast<int>(parts.with_x.size()),
                          static_cast<int>(parts.with_neither.size()));
      for (std::size_t i = 0; i < parts.with_neither.size(); ++i)
        out_sets[parts.with_neither[i]] |= (static_cast<int>(i) < take ? R[1] : R[2]);
      break;
    }
  }
  Configuration out{shared(g), std::move(out_sets), r};
  ensure_valid(out, "ear_extend");
  return out;
}

Configuration dumbbell_c4c4(const Graph& g, const StructureReport& rep) {
  require_dumbbell(g, rep, "dumbbell_c4c4");
  auto p1 = induced_subgraph(g, rep.plate1);
  auto p2 = induced_subgraph(g, rep.plate2);
  if (recognize_cycle(p1.graph) != std::optional<int>(4) ||
      recognize_cycle(p2.graph) != std::optional<int>(4))
    throw std::invalid_argument("dumbbell_c4c4 needs two 4-cycle plates");
  auto [va, vb, vc] = c4_labels(g, rep.plate1, rep.handle.front());
  auto [vg, ve, vf] = c4_labels(g, rep.plate2, rep.handle.back());
  int s_len = static_cast<int>(rep.handle.size());
  VertexSet R[3];
  for (int i = 1; i <= s_len; ++i) R[i % 3].add(rep.handle[i - 1]);
  auto S = [&](std::initializer_list<int> vs, std::initializer_list<int> rs) {
    VertexSet d;
    for (int v : vs) d.add(v);
    for (int i : rs) d |= R[i];
    return d;
  };
  std::vector<VertexSet> sets;
  switch (s_len % 3) {
    case 0:
      sets = {S({vb, vc, ve}, {0}), S({vc, vf}, {0, 1}), S({vb, ve}, {0, 1}),
              S({vb, ve, vf}, {1}), S({va, vg}, {2}),    S({va, vg}, {2}),
              S({va, vg}, {2})};
      break;
    case 1:
      sets = {S({va, vc, vg}, {0}), S({vb, vc, vg}, {0}), S({vb, vg}, {1}),
              S({vc, ve}, {1}),     S({vb, vf}, {1}),     S({va, ve, vf}, {2}),
              S({va, ve, vf}, {2})};
      break;
    case 2:
      sets = {S({va, vc, ve, vf}, {0}), S({vb, vg}, {1}), S({vb, vg}, {1}),
              S({vc, vg}, {1}),         S({va, ve}, {2}), S({va, ve}, {2}),
              S({vb, vc, vf}, {2})};
      break;
  }
  Configuration out{shared(g), std::move(sets), 3};
  ensure_valid(out, "dumbbell_c4c4");
  return out;
}

Configuration dumbbell_c4h(const Graph& g, const StructureReport& rep,
                           const Configuration& plate2_config) {
  require_dumbbell(g, rep, "dumbbell_c4h");
  auto p1 = induced_subgraph(g, rep.plate1);
  if (recognize_cycle(p1.graph) != std::optional<int>(4))
    throw std::invalid_argument("dumbbell_c4h: plate 1 must be a 4-cycle");
  auto p2 = induced_subgraph(g, rep.plate2);
  require_valid(plate2_config, "dumbbell_c4h");
  if (!(*plate2_config.g == p2.graph))
    throw std::invalid_argument("dumbbell_c4h: configuration not bound to plate 2");
  int k = require_odd_rank(plate2_config, 3, "dumbbell_c4h");
  int ds = rep.handle.back();
  auto [va, vb, vc] = c4_labels(g, rep.plate1, rep.handle.front());
  int s_len = static_cast<int>(rep.handle.size());
  VertexSet R[3];
  for (int i = 1; i <= s_len; ++i) R[i % 3].add(rep.handle[i - 1]);

  std::vector<VertexSet> lifted = lift_sets(plate2_config.sets, p2.parent_ids);
  pad_vertex(lifted, ds, k, "dumbbell_c4h");
  std::vector<int> with_ds, without;
  for (int i = 0; i < static_cast<int>(lifted.size()); ++i)
    (lifted[i].contains(ds) ? with_ds : without).push_back(i);

  struct Family {
    VertexSet fixed;
    std::vector<int> group;
  };
  std::vector<Family> families;
  auto fix = [&](std::initializer_list<int> vs, std::initializer_list<int> rs) {
    VertexSet d;
    for (int v : vs) d.add(v);
    for (int i : rs) d |= R[i];
    return d;
  };
  switch (s_len % 3) {
    case 0: {
      auto dparts = slice(with_ds, k == 3 ? std::vector<int>{1, 2} : balanced_sizes(k, 2));
      auto uparts =
          slice(without, k == 3 ? std::vector<int>{1, 1, 2} : balanced_sizes(k + 1, 3));
      families = {{fix({vb, vc}, {0}), dparts[0]}, {fix({va}, {0, 2}), dparts[1]},
                  {fix({va}, {2}), uparts[0]},     {fix({vb}, {1}), uparts[1]},
                  {fix({vc}, {1}), uparts[2]}};
      break;
    }
    case 1: {
      auto dparts = slice(with_ds, balanced_sizes(k, 3));
      auto uparts = slice(without, balanced_sizes(k + 1, 2));
      families = {{fix({va}, {1}), dparts[0]},     {fix({vb}, {1}), dparts[1]},
                  {fix({vc}, {1}), dparts[2]},     {fix({vb, vc}, {0}), uparts[0]},
                  {fix({va}, {2}), uparts[1]}};
      break;
    }
    case 2: {
      auto uparts = slice(without, balanced_sizes(k + 1, 3));
      families = {{fix({va}, {2}), with_ds},
                  {fix({vb}, {1}), uparts[0]},
                  {fix({vc}, {1}), uparts[1]},
                  {fix({vb, vc}, {0}), uparts[2]}};
      break;
    }
  }
  std::vector<VertexSet> sets;
  for (const auto& fam : families)
    for (int i : fam.group) sets.push_back(lifted[i] | fam.fixed);
  Configuration out{shared(g), std::move(sets), k};
  ensure_valid(out, "dumbbell_c4h");
  if (out.k() != 2 * k + 1) throw std::logic_error("dumbbell_c4h lost sets");
  return out;
}

Configuration dumbbell_h1h2(const Graph& g, const StructureReport& rep,
                            const Configuration& c1, const Configuration& c2) {
  require_dumbbell(g, rep, "dumbbell_h1h2");
  auto p1 = induced_subgraph(g, rep.plate1);
  auto p2 = induced_subgraph(g, rep.plate2);
  require_valid(c1, "dumbbell_h1h2");
  require_valid(c2, "dumbbell_h1h2");
  if (!(*c1.g == p1.graph) || !(*c2.g == p2.graph))
    throw std::invalid_argument("dumbbell_h1h2: configurations not bound to the plates");
  int r = require_odd_rank(c1, 2, "dumbbell_h1h2");
  int k = require_odd_rank(c2, 2, "dumbbell_h1h2");
  if (k > r)
    throw std::invalid_argument("dumbbell_h1h2: pass the configuration of larger rank first");

  // Lift the smaller rank to r with disjoint dominating pairs, still local.
  std::vector<VertexSet> low = c2.sets;
  if (k < r) {
    auto [mis, rest] = disjoint_dominating_pair(p2.graph);
    for (int i = k; i < r; ++i) {
      low.push_back(mis);
      low.push_back(rest);
    }
  }

  int x = rep.handle.front(), y = rep.handle.back();
  auto x_first = [](std::vector<VertexSet> sets, int v) {
    std::stable_sort(sets.begin(), sets.end(),
                     [v](const VertexSet& a, const VertexSet& b) {
                       return a.contains(v) > b.contains(v);
                     });
    return sets;
  };

  if (rep.handle.size() == 1) {
    std::vector<VertexSet> high = x_first(lift_sets(c1.sets, p1.parent_ids), x);
    std::vector<VertexSet> low_g = x_first(lift_sets(low, p2.parent_ids), x);
    std::vector<VertexSet> sets;
    for (int i = 0; i < 2 * r + 1; ++i) sets.push_back(high[i] | low_g[i]);
    Configuration out{shared(g), std::move(sets), r};
    ensure_valid(out, "dumbbell_h1h2");
    return out;
  }

  auto joint = induced_subgraph(g, rep.plate1 | rep.plate2);
  std::vector<int> local(g.n, -1);
  for (int i = 0; i < joint.graph.n; ++i) local[joint.parent_ids[i]] = i;
  auto to_joint = [&](const std::vector<VertexSet>& sets, const std::vector<int>& parent_ids) {
    std::vector<VertexSet> out;
    for (const auto& d : sets) {
      VertexSet t;
      for (int v : d.members()) t.add(local[parent_ids[v]]);
      out.push_back(t);
    }
    return out;
  };
  int lx = local[x], ly = local[y];
  std::vector<VertexSet> high = to_joint(c1.sets, p1.parent_ids);
  std::vector<VertexSet> low_j = to_joint(low, p2.parent_ids);
  pad_vertex(high, lx, r, "dumbbell_h1h2");
  pad_vertex(low_j, ly, r, "dumbbell_h1h2");
  high = x_first(high, lx);
  low_j = x_first(low_j, ly);

  std::vector<VertexSet> sets{high[0] | low_j[r], low_j[0] | high[r]};
  for (int i = 1; i < 2 * r + 1; ++i) {
    if (i == r) continue;
    sets.push_back(high[i] | low_j[i]);
  }
  Configuration paired{shared(joint.graph), std::move(sets), r};
  ensure_valid(paired, "dumbbell_h1h2");
  if (!is_nice(paired, lx, ly))
    throw std::logic_error("dumbbell_h1h2 failed to produce a nice pairing");
  return ear_extend(paired, g, rep.handle);
}

Configuration k2p_configuration(int p) {
  if (p < 2) throw std::invalid_argument("k2p_configuration needs p >= 2");
  if (p + 2 > kMaxVertices) throw std::invalid_argument("k2p_configuration limited to 64 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p; ++i) {
    edges.emplace_back(0, 2 + i);
    edges.emplace_back(1, 2 + i);
  }
  Configuration c;
  c.g = shared(from_edge_list(edges));
  c.s = p;
  VertexSet all_b;
  for (int i = 0; i < p; ++i) all_b.add(2 + i);
  for (int i = 0; i < p; ++i) c.sets.push_back(VertexSet{}.add(0).add(2 + i));
  for (int i = 0; i < p; ++i) c.sets.push_back(VertexSet{}.add(1).add(2 + i));
  for (int i = 0; i < p - 2; ++i) c.sets.push_back(all_b);
  ensure_valid(c, "k2p_configuration");
  return c;
}

Configuration two_connected_synthesis(const Graph& g) {
  if (!is_two_connected(g))
    throw std::invalid_argument("two_connected_synthesis needs a 2-connected graph");
  if (recognize_cycle(g) == std::optional<int>(4))
    throw std::invalid_argument("C4 admits no configuration of value above 2");
  if (auto split = recognize_k2p(g); split && split->p() >= 3) {
    Configuration canon = k2p_configuration(split->p());
    std::vector<int> to_g(canon.g->n);
    to_g[0] = split->a1;
    to_g[1] = split->a2;
    auto bs = split->b.members();
    for (std::size_t i = 0; i < bs.size(); ++i) to_g[2 + i] = bs[i];
    Configuration out{shared(g), lift_sets(canon.sets, to_g), canon.s};
    ensure_valid(out, "two_connected_synthesis");
    return out;
  }
  auto cyc = find_cycle_avoiding_length_4(g);
  if (!cyc) throw std::logic_error("graph without long cycles escaped the K_{2,p} branch");
  EarDecomposition ed = open_ear_decomposition(g, *cyc);

  // Stable ids: cycle vertices in cycle order, then ear internals as added.
  std::vector<int> order = ed.cycle;
  for (const auto& ear : ed.ears)
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) order.push_back(ear[i]);
  if (static_cast<int>(order.size()) != g.n)
    throw std::logic_error("ear decomposition does not cover the graph");
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;

  int m = static_cast<int>(cyc->size());
  Graph work = canonical_cycle(m);
  Configuration c = cycle_configuration(m);
  c = normalize_to_odd(c, c.s);
  for (const auto& ear : ed.ears) {
    std::vector<int> lear;
    for (int v : ear) lear.push_back(pos[v]);
    int t = static_cast<int>(ear.size()) - 2;
    Graph next = work;
    next.n += t;
    next.adj.resize(next.n);
    for (std::size_t i = 0; i + 1 < lear.size(); ++i) {
      next.adj[lear[i]].add(lear[i + 1]);
      next.adj[lear[i + 1]].add(lear[i]);
    }
    if (t == 0) {
      Configuration rebound{shared(next), c.sets, c.s};
      ensure_valid(rebound, "two_connected_synthesis");
      c = std::move(rebound);
    } else {
      c = make_nice(c, lear.front(), lear.back());
      c = ear_extend(c, next, lear);
    }
    work = *c.g;
  }
  Configuration out{shared(g), lift_sets(c.sets, order), c.s};
  ensure_valid(out, "two_connected_synthesis");
  return out;
}

namespace {

// Connected, min degree >= 2, not C4: recurse along the dumbbell structure.
Configuration connected_synthesis(const Graph& h) {
  StructureReport rep = dumbbell_decomposition(h);
  if (rep.two_connected) return two_connected_synthesis(h);
  auto p1 = induced_subgraph(h, rep.plate1);
  auto p2 = induced_subgraph(h, rep.plate2);
  bool c4_first = recognize_cycle(p1.graph) == std::optional<int>(4);
  bool c4_second = recognize_cycle(p2.graph) == std::optional<int>(4);
  if (c4_first && c4_second) return dumbbell_c4c4(h, rep);
  if (c4_first || c4_second) {
    StructureReport oriented = c4_first ? rep : swapped(rep);
    auto plate = induced_subgraph(h, oriented.plate2);
    Configuration ch = connected_synthesis(plate.graph);
    ch = normalize_to_odd(ch, ch.s);
    while (ch.s < 3) ch = double_plus_set(ch, ch.g->vertices());
    return dumbbell_c4h(h, oriented, ch);
  }
  Configuration ca = connected_synthesis(p1.graph);
  Configuration cb = connected_synthesis(p2.graph);
  ca = normalize_to_odd(ca, std::max(ca.s, 2));
  cb = normalize_to_odd(cb, std::max(cb.s, 2));
  if (ca.s >= cb.s) return dumbbell_h1h2(h, rep, ca, cb);
  return dumbbell_h1h2(h, swapped(rep), cb, ca);
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FdOne:
      return "FdOne";
    case Verdict::FdTwo:
      return "FdTwo";
    default:
      return "FdAboveTwo";
  }
}

Classification classify(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("classify needs at least one vertex");
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 0) return {Verdict::FdOne, "isolated-vertex", {v}, std::nullopt};
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 1) return {Verdict::FdTwo, "degree-one-vertex", {v}, std::nullopt};
  auto comps = connected_components(g);
  for (const auto& comp : comps) {
    auto sub = induced_subgraph(g, comp);
    if (recognize_cycle(sub.graph) == std::optional<int>(4))
      return {Verdict::FdTwo, "c4-component", comp.members(), std::nullopt};
  }
  std::vector<Configuration> locals;
  std::vector<std::vector<int>> maps;
  int rank = 0;
  for (const auto& comp : comps) {
    auto sub = induced_subgraph(g, comp);
    Configuration c = connected_synthesis(sub.graph);
    c = normalize_to_odd(c, c.s);
    rank = std::max(rank, c.s);
    locals.push_back(std::move(c));
    maps.push_back(sub.parent_ids);
  }
  std::vector<VertexSet> sets(2 * rank + 1);
  for (std::size_t i = 0; i < locals.size(); ++i) {
    Configuration c = normalize_to_odd(locals[i], rank);
    for (int j = 0; j < c.k(); ++j)
      for (int v : c.sets[j].members()) sets[j].add(maps[i][v]);
  }
  Configuration cert{std::make_shared<Graph>(g), std::move(sets), rank};
  VerifyResult check = verify(cert);
  if (!check.ok)
    throw std::logic_error("classify built an invalid certificate: " + check.message);
  return {Verdict::FdAboveTwo, "none", {}, std::move(cert)};
}

nlohmann::json classification_to_json(const Classification& c, bool include_certificate) {
  nlohmann::json j{{"verdict", verdict_name(c.verdict)}, {"reason", c.reason}};
  if (!c.witness.empty()) {
    if (c.witness.size() == 1)
      j["witness"] = c.witness[0];
    else
      j["witness"] = c.witness;
  }
  if (include_certificate && c.certificate)
    j["certificate"] = configuration_to_json(*c.certificate);
  return j;
}

}  // namespace fracdom
