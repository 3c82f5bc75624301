#include "fracdom/configuration.hpp"

#include <stdexcept>

#include "fracdom/domination.hpp"
#include "fracdom/graph_io.hpp"

namespace fracdom {

namespace {

void require_valid(const Configuration& c, const char* who) {
  VerifyResult r = verify(c);
  if (!r.ok)
    throw std::invalid_argument(std::string(who) + ": invalid configuration: " + r.message);
}

void ensure_valid(const Configuration& c, const char* who) {
  VerifyResult r = verify(c);
  if (!r.ok)
    throw std::logic_error(std::string(who) + " produced an invalid configuration: " +
                           r.message);
}

void require_pair(const Configuration& c, int x, int y, const char* who) {
  if (!c.g) throw std::invalid_argument(std::string(who) + ": configuration has no bound graph");
  if (x < 0 || x >= c.g->n || y < 0 || y >= c.g->n)
    throw std::invalid_argument(std::string(who) + ": vertex outside the graph");
  if (x == y) throw std::invalid_argument(std::string(who) + ": the two vertices must differ");
}

}  // namespace

VerifyResult verify(const Configuration& c) {
  if (!c.g) return {false, "configuration has no bound graph"};
  const Graph& g = *c.g;
  if (g.n == 0) return {false, "configuration on the empty graph"};
  if (c.sets.empty()) return {false, "configuration has no sets"};
  if (c.s < 1) return {false, "coverage bound " + std::to_string(c.s) + " must be positive"};
  for (std::size_t i = 0; i < c.sets.size(); ++i)
    if (!c.sets[i].subset_of(g.vertices()))
      return {false, "set " + std::to_string(i) + " reaches outside the graph"};
  for (std::size_t i = 0; i < c.sets.size(); ++i) {
    VertexSet covered = c.sets[i];
    for (int v : c.sets[i].members()) covered |= g.adj[v];
    if (!(covered == g.vertices()))
      return {false, "set " + std::to_string(i) + " does not dominate vertex " +
                         std::to_string((g.vertices() - covered).min())};
  }
  for (int v = 0; v < g.n; ++v) {
    int cover = 0;
    for (const auto& d : c.sets) cover += d.contains(v);
    if (cover > c.s)
      return {false, "vertex " + std::to_string(v) + " covered " + std::to_string(cover) +
                         " > " + std::to_string(c.s)};
  }
  return {true, ""};
}

Rational value(const Configuration& c) {
  require_valid(c, "value");
  return Rational(c.k(), c.s);
}

int odd_shape_rank(const Configuration& c) {
  return c.k() == 2 * c.s + 1 ? c.s : -1;
}

Configuration combine(const Configuration& a, const Configuration& b) {
  require_valid(a, "combine");
  require_valid(b, "combine");
  if (!(*a.g == *b.g))
    throw std::invalid_argument("combine: configurations bound to different graphs");
  Configuration out{a.g, a.sets, a.s + b.s};
  out.sets.insert(out.sets.end(), b.sets.begin(), b.sets.end());
  ensure_valid(out, "combine");
  return out;
}

Configuration normalize_to_odd(const Configuration& c, int target_k) {
  require_valid(c, "normalize_to_odd");
  Rational v = Rational(c.k(), c.s);
  if (v <= 2)
    throw std::invalid_argument("normalize_to_odd needs value > 2, got " +
                                to_fraction_string(v));
  int q = c.s;
  if (target_k < q)
    throw std::invalid_argument("normalize_to_odd: target rank " + std::to_string(target_k) +
                                " below coverage bound " + std::to_string(q));
  Configuration out{c.g, {}, target_k};
  out.sets.assign(c.sets.begin(), c.sets.begin() + (2 * q + 1));
  if (target_k > q) {
    auto [mis, rest] = disjoint_dominating_pair(*c.g);
    for (int i = q; i < target_k; ++i) {
      out.sets.push_back(mis);
      out.sets.push_back(rest);
    }
  }
  if (odd_shape_rank(out) != target_k)
    throw std::logic_error("normalize_to_odd lost its shape");
  ensure_valid(out, "normalize_to_odd");
  return out;
}

PairSplit split_by_pair(const Configuration& c, int x, int y) {
  require_pair(c, x, y, "split_by_pair");
  PairSplit parts;
  for (int i = 0; i < c.k(); ++i) {
    bool hx = c.sets[i].contains(x), hy = c.sets[i].contains(y);
    if (hx && hy)
      parts.with_both.push_back(i);
    else if (hx)
      parts.with_x.push_back(i);
    else if (hy)
      parts.with_y.push_back(i);
    else
      parts.with_neither.push_back(i);
  }
  return parts;
}

bool is_nice(const Configuration& c, int x, int y) {
  require_valid(c, "is_nice");
  require_pair(c, x, y, "is_nice");
  int r = odd_shape_rank(c);
  if (r < 1) throw std::invalid_argument("is_nice needs a (2r+1, r)-shaped configuration");
  PairSplit parts = split_by_pair(c, x, y);
  return static_cast<int>(parts.with_x.size() + parts.with_both.size()) == r &&
         static_cast<int>(parts.with_y.size() + parts.with_both.size()) == r &&
         !parts.with_x.empty() && !parts.with_y.empty() && !parts.with_both.empty();
}

Configuration double_plus_set(const Configuration& c, VertexSet extra) {
  require_valid(c, "double_plus_set");
  int k = odd_shape_rank(c);
  if (k < 1)
    throw std::invalid_argument("double_plus_set needs a (2k+1, k)-shaped configuration");
  if (!is_dominating(*c.g, extra))
    throw std::invalid_argument("double_plus_set: extra set " + to_string(extra) +
                                " does not dominate");
  Configuration out{c.g, {}, 2 * k + 1};
  out.sets.push_back(extra);
  for (const auto& d : c.sets) {
    out.sets.push_back(d);
    out.sets.push_back(d);
  }
  ensure_valid(out, "double_plus_set");
  return out;
}

Configuration make_nice(const Configuration& c, int x, int y) {
  require_valid(c, "make_nice");
  require_pair(c, x, y, "make_nice");
  if (odd_shape_rank(c) < 1)
    throw std::invalid_argument("make_nice needs a (2k+1, k)-shaped configuration");
  Configuration cur = c;
  PairSplit parts = split_by_pair(cur, x, y);
  if (parts.with_both.empty()) {
    cur = double_plus_set(cur, cur.g->vertices());
  } else if (static_cast<int>(parts.with_both.size()) == cur.s) {
    if (min_degree(*cur.g) < 2)
      throw std::invalid_argument(
          "make_nice: every set holds both vertices and min degree < 2");
    VertexSet extra = cur.g->vertices();
    extra.drop(x).drop(y);
    cur = double_plus_set(cur, extra);
  }
  parts = split_by_pair(cur, x, y);
  int r = cur.s;
  int need_x = r - static_cast<int>(parts.with_x.size() + parts.with_both.size());
  int need_y = r - static_cast<int>(parts.with_y.size() + parts.with_both.size());
  if (need_x < 0 || need_y < 0 ||
      need_x + need_y > static_cast<int>(parts.with_neither.size()))
    throw std::logic_error("make_nice: padding infeasible");
  for (int i = 0; i < need_x; ++i) cur.sets[parts.with_neither[i]].add(x);
  for (int i = 0; i < need_y; ++i) cur.sets[parts.with_neither[need_x + i]].add(y);
  ensure_valid(cur, "make_nice");
  if (!is_nice(cur, x, y)) throw std::logic_error("make_nice failed to reach a nice shape");
  return cur;
}

nlohmann::json configuration_to_json(const Configuration& c) {
  require_valid(c, "configuration_to_json");
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& d : c.sets) sets.push_back(d.members());
  return {{"graph", graph_to_json(*c.g)},
          {"k", c.k()},
          {"s", c.s},
          {"sets", sets},
          {"value", to_fraction_string(Rational(c.k(), c.s))}};
}

Configuration configuration_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate must be a JSON object");
  for (const char* field : {"graph", "k", "s", "sets", "value"})
    if (!j.contains(field))
      throw std::invalid_argument(std::string("certificate lacks field '") + field + "'");
  auto graph = std::make_shared<Graph>(graph_from_json(j.at("graph")));
  if (!j.at("s").is_number_integer() || j.at("s").get<int>() < 1)
    throw std::invalid_argument("certificate field 's' must be a positive integer");
  if (!j.at("sets").is_array() || j.at("sets").empty())
    throw std::invalid_argument("certificate field 'sets' must be a nonempty array");
  if (!j.at("k").is_number_integer() ||
      j.at("k").get<long>() != static_cast<long>(j.at("sets").size()))
    throw std::invalid_argument("certificate field 'k' does not match the number of sets");
  if (!j.at("value").is_string())
    throw std::invalid_argument("certificate field 'value' must be a fraction string");
  fraction_from_string(j.at("value").get<std::string>());
  Configuration c{graph, {}, j.at("s").get<int>()};
  int index = 0;
  for (const auto& arr : j.at("sets")) {
    if (!arr.is_array())
      throw std::invalid_argument("set " + std::to_string(index) + " must be an array");
    VertexSet d;
    for (const auto& entry : arr) {
      if (!entry.is_number_integer())
        throw std::invalid_argument("set " + std::to_string(index) +
                                    " holds a non-integer entry");
      int v = entry.get<int>();
      if (v < 0 || v >= graph->n)
        throw std::invalid_argument("set " + std::to_string(index) + " contains vertex " +
                                    std::to_string(v) + " outside a graph on " +
                                    std::to_string(graph->n) + " vertices");
      if (d.contains(v))
        throw std::invalid_argument("set " + std::to_string(index) + " repeats vertex " +
                                    std::to_string(v));
      d.add(v);
    }
    c.sets.push_back(d);
    ++index;
  }
  return c;
}

VerifyResult verify_certificate_json(const nlohmann::json& j) {
  Configuration c = configuration_from_json(j);
  VerifyResult r = verify(c);
  if (!r.ok) return r;
  Rational declared = fraction_from_string(j.at("value").get<std::string>());
  Rational derived(c.k(), c.s);
  if (declared != derived)
    return {false, "declared value " + to_fraction_string(declared) +
                       " does not match k/s = " + to_fraction_string(derived)};
  return {true, ""};
}

}  // namespace fracdom
