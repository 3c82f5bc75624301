#include "fracdom/graph_gen.hpp"

#include <memory>
#include <stdexcept>

namespace fracdom {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 outer{seed};
  SplitMix64 inner{outer.next() ^ (index * 0x9E3779B97F4A7C15ull)};
  return inner.next();
}

namespace {

struct BitSource {
  SplitMix64* rng;
  std::uint64_t buffer = 0;
  int left = 0;
  int bit() {
    if (left == 0) {
      buffer = rng->next();
      left = 64;
    }
    int b = buffer & 1;
    buffer >>= 1;
    --left;
    return b;
  }
};

}  // namespace

Graph random_graph(int n, SplitMix64& rng) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("bad vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  BitSource bits{&rng};
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (bits.bit()) {
        g.adj[u].add(v);
        g.adj[v].add(u);
      }
  return g;
}

GraphStream exhaustive_graph_stream(int max_n) {
  if (max_n < 1 || max_n > 6)
    throw std::invalid_argument("exhaustive stream supports 1 <= max_n <= 6");
  auto n = std::make_shared<int>(1);
  auto mask = std::make_shared<std::uint64_t>(0);
  return [n, mask, max_n]() -> std::optional<Graph> {
    if (*n > max_n) return std::nullopt;
    Graph g;
    g.n = *n;
    g.adj.assign(*n, {});
    std::uint64_t m = *mask;
    for (int v = 1; v < *n; ++v)
      for (int u = 0; u < v; ++u, m >>= 1)
        if (m & 1) {
          g.adj[u].add(v);
          g.adj[v].add(u);
        }
    std::uint64_t pairs = (std::uint64_t)(*n) * (*n - 1) / 2;
    if (++*mask == (1ull << pairs)) {
      *mask = 0;
      ++*n;
    }
    return g;
  };
}

GraphStream random_graph_stream(int max_n, long count, std::uint64_t seed) {
  if (max_n < 7) throw std::invalid_argument("random stream needs max_n >= 7");
  if (max_n > kMaxVertices) throw std::invalid_argument("max_n beyond 64");
  auto index = std::make_shared<long>(0);
  int span = max_n - 6;
  return [index, count, seed, span]() -> std::optional<Graph> {
    if (*index >= count) return std::nullopt;
    long i = (*index)++;
    int n = 7 + static_cast<int>(i % span);
    SplitMix64 rng{derive_seed(seed, static_cast<std::uint64_t>(i))};
    for (;;) {
      Graph g = random_graph(n, rng);
      if (min_degree(g) >= 2) return g;
    }
  };
}

Graph random_connected_min_degree2(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("no connected graph with min degree 2 below n = 3");
  SplitMix64 rng{seed};
  for (;;) {
    Graph g = random_graph(n, rng);
    if (min_degree(g) < 2) continue;
    if (connected_components(g).size() != 1) continue;
    if (recognize_cycle(g) == std::optional<int>(4)) continue;
    return g;
  }
}

}  // namespace fracdom
