#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "fracdom/graph.hpp"

namespace fracdom {

// Deterministic generator; identical across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// Independent stream for item `index` under a master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// G(n, 1/2): each pair an edge on a fair coin flip.
Graph random_graph(int n, SplitMix64& rng);

using GraphStream = std::function<std::optional<Graph>()>;

// Every labeled graph with 1 <= n <= max_n, vertex count then edge mask ascending.
GraphStream exhaustive_graph_stream(int max_n);

// `count` seeded G(n, 1/2) draws resampled until min degree >= 2, n cycling
// over 7..max_n (the exhaustive stream already covers smaller graphs).
GraphStream random_graph_stream(int max_n, long count, std::uint64_t seed);

// Seeded G(n, 1/2) resampled until connected with min degree >= 2 and not C4.
Graph random_connected_min_degree2(int n, std::uint64_t seed);

}  // namespace fracdom
