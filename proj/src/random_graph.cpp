#include "zerograph/random_graph.hpp"

#include <set>
#include <string>
#include <utility>

namespace zerograph {

namespace {

std::vector<std::string> numbered_vertices(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

std::string edge_id(std::size_t k) { return "e" + std::to_string(k + 1); }

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
  // (2^64 - bound) % bound == 2^64 mod bound
  const std::uint64_t limit = 0 - ((0 - bound) % bound);
  for (;;) {
    std::uint64_t r = next();
    if (limit == 0 || r < limit) return r % bound;
  }
}

RandomKind parse_random_kind(std::string_view name) {
  if (name == "oriented") return RandomKind::kOriented;
  if (name == "bipartite-undirected") return RandomKind::kBipartiteUndirected;
  if (name == "simple-undirected") return RandomKind::kSimpleUndirected;
  throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

std::string_view to_string(RandomKind kind) {
  switch (kind) {
    case RandomKind::kOriented: return "oriented";
    case RandomKind::kBipartiteUndirected: return "bipartite-undirected";
    case RandomKind::kSimpleUndirected: return "simple-undirected";
  }
  return "?";
}

OrientedGraph random_oriented(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw GraphError("random graph needs at least one vertex");
  if (n == 1 && m > 0) throw GraphError("a single vertex carries no arcs without self-loops");
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    auto tail = static_cast<std::size_t>(rng.below(n));
    auto head = static_cast<std::size_t>(rng.below(n - 1));
    if (head >= tail) ++head;
    arcs.push_back(Arc{edge_id(k), tail, head});
  }
  return OrientedGraph(numbered_vertices(n), std::move(arcs));
}

UndirectedGraph random_simple(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw GraphError("random graph needs at least one vertex");
  if (m > n * (n - 1) / 2) {
    throw GraphError("infeasible: " + std::to_string(m) + " simple edges on " +
                     std::to_string(n) + " vertices");
  }
  SplitMix64 rng(seed);
  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<Edge> edges;
  while (edges.size() < m) {
    auto u = static_cast<std::size_t>(rng.below(n));
    auto v = static_cast<std::size_t>(rng.below(n - 1));
    if (v >= u) ++v;
    auto key = std::minmax(u, v);
    if (!used.insert(key).second) continue;
    edges.push_back(Edge{edge_id(edges.size()), key.first, key.second});
  }
  return UndirectedGraph(numbered_vertices(n), std::move(edges));
}

UndirectedGraph random_bipartite(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2) throw GraphError("a bipartite graph needs at least two vertices");
  if (m > (n / 2) * (n - n / 2)) {
    throw GraphError("infeasible: " + std::to_string(m) + " bipartite edges on " +
                     std::to_string(n) + " vertices");
  }
  SplitMix64 rng(seed);
  std::size_t k = 0;
  do {
    k = 1 + static_cast<std::size_t>(rng.below(n - 1));
  } while (k * (n - k) < m);

  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<Edge> edges;
  while (edges.size() < m) {
    auto u = static_cast<std::size_t>(rng.below(k));
    auto v = k + static_cast<std::size_t>(rng.below(n - k));
    if (!used.emplace(u, v).second) continue;
    edges.push_back(Edge{edge_id(edges.size()), u, v});
  }
  Bipartition b;
  for (std::size_t i = 0; i < n; ++i) b.side.push_back(i < k ? Side::kV1 : Side::kV2);
  return UndirectedGraph(numbered_vertices(n), std::move(edges), std::move(b));
}

AnyGraph random_graph(RandomKind kind, std::size_t n, std::size_t m, std::uint64_t seed) {
  switch (kind) {
    case RandomKind::kOriented: return random_oriented(n, m, seed);
    case RandomKind::kSimpleUndirected: return random_simple(n, m, seed);
    case RandomKind::kBipartiteUndirected: return random_bipartite(n, m, seed);
  }
  throw std::invalid_argument("unknown graph kind");
}

}  // namespace zerograph
