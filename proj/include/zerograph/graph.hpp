#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace zerograph {

/// Raised for structurally invalid graphs and malformed graph documents.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side : std::uint8_t { kV1 = 0, kV2 = 1 };

/// A two-sided vertex partition, one side tag per vertex index.
struct Bipartition {
  std::vector<Side> side;

  std::vector<std::size_t> part(Side s) const;
  bool operator==(const Bipartition&) const = default;
};

/// Bipartition given by vertex ids, as it appears in graph documents.
struct IdBipartition {
  std::vector<std::string> v1;
  std::vector<std::string> v2;
};

struct Arc {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;

  bool operator==(const Arc&) const = default;
};

struct ArcSpec {
  std::string id;
  std::string tail;
  std::string head;
};

/// Finite oriented multigraph without self-loops. Arc and vertex order is
/// the construction order and every enumeration in the library follows it.
class OrientedGraph {
 public:
  /// Validates and builds. Throws GraphError on an empty vertex list,
  /// duplicate ids, out-of-range endpoints, self-loops or a bipartition
  /// that does not separate every arc.
  OrientedGraph(std::vector<std::string> vertices, std::vector<Arc> arcs,
                std::optional<Bipartition> bipartition = std::nullopt);

  static OrientedGraph from_ids(std::vector<std::string> vertices,
                                const std::vector<ArcSpec>& arcs,
                                const std::optional<IdBipartition>& bipartition = std::nullopt);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t i) const { return arcs_.at(i); }
  const std::optional<Bipartition>& bipartition() const { return bipartition_; }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::size_t vertex_index(std::string_view id) const;
  std::optional<std::size_t> find_arc(std::string_view id) const;

  /// Arc indices leaving / entering x, in arc order.
  const std::vector<std::size_t>& out_arcs(std::size_t x) const { return out_.at(x); }
  const std::vector<std::size_t>& in_arcs(std::size_t x) const { return in_.at(x); }

  /// Same graph with the given bipartition attached (validated).
  OrientedGraph with_bipartition(Bipartition b) const;
  /// Every arc flipped; ids and order kept.
  OrientedGraph reversed() const;

  bool operator==(const OrientedGraph& other) const {
    return vertices_ == other.vertices_ && arcs_ == other.arcs_ &&
           bipartition_ == other.bipartition_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
  std::optional<Bipartition> bipartition_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;

  bool operator==(const Edge&) const = default;
};

struct EdgeSpec {
  std::string id;
  std::string u;
  std::string v;
};

class UndirectedGraph {
 public:
  UndirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges,
                  std::optional<Bipartition> bipartition = std::nullopt);

  static UndirectedGraph from_ids(std::vector<std::string> vertices,
                                  const std::vector<EdgeSpec>& edges,
                                  const std::optional<IdBipartition>& bipartition = std::nullopt);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<Bipartition>& bipartition() const { return bipartition_; }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::size_t vertex_index(std::string_view id) const;

  /// No two edges share an endpoint pair.
  bool is_simple() const;
  std::size_t max_degree() const;

  UndirectedGraph with_bipartition(Bipartition b) const;

  bool operator==(const UndirectedGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ &&
           bipartition_ == other.bipartition_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::optional<Bipartition> bipartition_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
};

/// Oriented graph obtained by replacing each undirected edge e = {x1, x2}
/// with e' : x1 -> x2 and e'' : x2 -> x1 (arc ids e + "'" and e + "''",
/// stored consecutively at indices 2k and 2k+1).
struct DoubledGraph {
  OrientedGraph graph;
  std::vector<std::size_t> reversal;  // arc index -> partner arc index
  std::vector<std::size_t> origin;    // arc index -> source edge index
};

DoubledGraph doubled(const UndirectedGraph& g);

/// Outcome of a 2-colouring attempt. Exactly one of partition / odd_cycle
/// is meaningful: odd_cycle lists the vertices of an odd cycle in order
/// (closing edge from back() to front()).
struct BipartiteCheck {
  std::optional<Bipartition> partition;
  std::vector<std::size_t> odd_cycle;

  explicit operator bool() const { return partition.has_value(); }
};

/// Uses the graph's own bipartition when present; otherwise 2-colours each
/// connected component starting from its lexicographically least vertex id,
/// which is placed in V1.
BipartiteCheck check_bipartite(const OrientedGraph& g);
BipartiteCheck check_bipartite(const UndirectedGraph& g);

/// (max out-degree) * (max in-degree); 0 for an arcless graph.
std::uint64_t deg2(const OrientedGraph& g);

}  // namespace zerograph
