#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "zerograph/graph_io.hpp"

namespace zerograph {

/// SplitMix64 (Steele, Lea, Flood). State advances by 0x9E3779B97F4A7C15 per
/// draw; output mixes with shifts 30/27/31 and multipliers 0xBF58476D1CE4E5B9,
/// 0x94D049BB133111EB.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound) by rejection: draws r until r < 2^64 - (2^64 mod bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

enum class RandomKind { kOriented, kBipartiteUndirected, kSimpleUndirected };

RandomKind parse_random_kind(std::string_view name);
std::string_view to_string(RandomKind kind);

/// Deterministic generator. Vertex ids are "1".."n", edge ids "e1".."em".
///
/// oriented: each arc draws tail = below(n), head = below(n - 1) skipping
///   the tail (head += head >= tail). Duplicates allowed.
/// simple-undirected: draws u = below(n), v = below(n - 1) skipping u,
///   stores ends as (min, max) and rejects pairs already present.
/// bipartite-undirected: k = 1 + below(n - 1) is redrawn until
///   k * (n - k) >= m; V1 = first k vertices, V2 = the rest. Edges draw
///   u = below(k), v = k + below(n - k), rejecting repeats. The partition
///   is attached to the returned graph.
///
/// Throws GraphError when (n, m) is infeasible for the kind.
AnyGraph random_graph(RandomKind kind, std::size_t n, std::size_t m, std::uint64_t seed);

OrientedGraph random_oriented(std::size_t n, std::size_t m, std::uint64_t seed);
UndirectedGraph random_simple(std::size_t n, std::size_t m, std::uint64_t seed);
UndirectedGraph random_bipartite(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace zerograph
