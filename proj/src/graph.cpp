#include "zerograph/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace zerograph {

namespace {

std::unordered_map<std::string, std::size_t> index_vertices(
    const std::vector<std::string>& vertices) {
  if (vertices.empty()) throw GraphError("graph must have at least one vertex");
  std::unordered_map<std::string, std::size_t> lookup;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!lookup.emplace(vertices[i], i).second) {
      throw GraphError("duplicate vertex id '" + vertices[i] + "'");
    }
  }
  return lookup;
}

void check_edge_ids(const std::vector<std::string>& ids) {
  std::set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) throw GraphError("duplicate edge id '" + id + "'");
  }
}

void check_bipartition(const Bipartition& b, std::size_t n,
                       const std::vector<std::pair<std::size_t, std::size_t>>& ends,
                       const std::vector<std::string>& edge_ids) {
  if (b.side.size() != n) throw GraphError("bipartition does not cover the vertex set");
  if (b.part(Side::kV1).empty() || b.part(Side::kV2).empty()) {
    throw GraphError("bipartition parts must be nonempty");
  }
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (b.side[ends[i].first] == b.side[ends[i].second]) {
      throw GraphError("edge '" + edge_ids[i] + "' does not cross the bipartition");
    }
  }
}

Bipartition bipartition_from_ids(const IdBipartition& ids,
                                 const std::unordered_map<std::string, std::size_t>& lookup,
                                 std::size_t n) {
  std::vector<int> assigned(n, -1);
  auto place = [&](const std::vector<std::string>& part, Side s) {
    for (const auto& id : part) {
      auto it = lookup.find(id);
      if (it == lookup.end()) throw GraphError("bipartition names unknown vertex '" + id + "'");
      if (assigned[it->second] != -1) {
        throw GraphError("vertex '" + id + "' appears twice in the bipartition");
      }
      assigned[it->second] = static_cast<int>(s);
    }
  };
  place(ids.v1, Side::kV1);
  place(ids.v2, Side::kV2);
  Bipartition b;
  b.side.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i] == -1) throw GraphError("bipartition does not cover the vertex set");
    b.side.push_back(static_cast<Side>(assigned[i]));
  }
  return b;
}

std::size_t lookup_or_throw(const std::unordered_map<std::string, std::size_t>& lookup,
                            std::string_view id) {
  auto it = lookup.find(std::string(id));
  if (it == lookup.end()) throw GraphError("unknown vertex '" + std::string(id) + "'");
  return it->second;
}

// 2-colouring of an undirected multigraph given as an endpoint list.
BipartiteCheck two_colour(const std::vector<std::string>& names,
                          const std::vector<std::pair<std::size_t, std::size_t>>& ends) {
  const std::size_t n = names.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : ends) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);

  std::vector<std::vector<std::size_t>> components;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // collect the component, then root it at its least id
    std::vector<std::size_t> members{start};
    seen[start] = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t w : adj[members[k]]) {
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    std::size_t root = *std::min_element(members.begin(), members.end(),
                                         [&](std::size_t a, std::size_t b) {
                                           return names[a] < names[b];
                                         });
    colour[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[u]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          // odd cycle: u -> ... -> lca <- ... <- w, closed by the edge w-u
          std::vector<std::size_t> up_u{u}, up_w{w};
          std::size_t a = u, b = w;
          while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
          while (a != b) {
            up_u.push_back(a = parent[a]);
            up_w.push_back(b = parent[b]);
          }
          up_w.pop_back();  // lca already in up_u
          BipartiteCheck result;
          result.odd_cycle = std::move(up_u);
          result.odd_cycle.insert(result.odd_cycle.end(), up_w.rbegin(), up_w.rend());
          return result;
        }
      }
    }
    components.push_back(std::move(members));
  }

  // every component rooted in V1 leaves V2 empty (edgeless graph); flip the
  // last component so both parts are nonempty
  if (components.size() > 1 &&
      std::all_of(colour.begin(), colour.end(), [](int c) { return c == 0; })) {
    for (std::size_t x : components.back()) colour[x] = 1;
  }

  Bipartition b;
  b.side.reserve(n);
  for (int c : colour) b.side.push_back(c == 0 ? Side::kV1 : Side::kV2);
  return BipartiteCheck{std::move(b), {}};
}

}  // namespace

std::vector<std::size_t> Bipartition::part(Side s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (side[i] == s) out.push_back(i);
  }
  return out;
}

OrientedGraph::OrientedGraph(std::vector<std::string> vertices, std::vector<Arc> arcs,
                             std::optional<Bipartition> bipartition)
    : vertices_(std::move(vertices)),
      arcs_(std::move(arcs)),
      bipartition_(std::move(bipartition)),
      vertex_lookup_(index_vertices(vertices_)),
      out_(vertices_.size()),
      in_(vertices_.size()) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.tail >= vertices_.size() || a.head >= vertices_.size()) {
      throw GraphError("arc '" + a.id + "' references an unknown vertex");
    }
    if (a.tail == a.head) throw GraphError("arc '" + a.id + "' is a self-loop");
    out_[a.tail].push_back(i);
    in_[a.head].push_back(i);
    ids.push_back(a.id);
    ends.emplace_back(a.tail, a.head);
  }
  check_edge_ids(ids);
  if (bipartition_) check_bipartition(*bipartition_, vertices_.size(), ends, ids);
}

OrientedGraph OrientedGraph::from_ids(std::vector<std::string> vertices,
                                      const std::vector<ArcSpec>& arcs,
                                      const std::optional<IdBipartition>& bipartition) {
  auto lookup = index_vertices(vertices);
  std::vector<Arc> built;
  built.reserve(arcs.size());
  for (const auto& spec : arcs) {
    built.push_back(Arc{spec.id, lookup_or_throw(lookup, spec.tail),
                        lookup_or_throw(lookup, spec.head)});
  }
  std::optional<Bipartition> b;
  if (bipartition) b = bipartition_from_ids(*bipartition, lookup, vertices.size());
  return OrientedGraph(std::move(vertices), std::move(built), std::move(b));
}

std::optional<std::size_t> OrientedGraph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t OrientedGraph::vertex_index(std::string_view id) const {
  return lookup_or_throw(vertex_lookup_, id);
}

std::optional<std::size_t> OrientedGraph::find_arc(std::string_view id) const {
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (arcs_[i].id == id) return i;
  }
  return std::nullopt;
}

OrientedGraph OrientedGraph::with_bipartition(Bipartition b) const {
  return OrientedGraph(vertices_, arcs_, std::move(b));
}

OrientedGraph OrientedGraph::reversed() const {
  std::vector<Arc> flipped = arcs_;
  for (auto& a : flipped) std::swap(a.tail, a.head);
  return OrientedGraph(vertices_, std::move(flipped), bipartition_);
}

UndirectedGraph::UndirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges,
                                 std::optional<Bipartition> bipartition)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      bipartition_(std::move(bipartition)),
      vertex_lookup_(index_vertices(vertices_)) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& e : edges_) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) {
      throw GraphError("edge '" + e.id + "' references an unknown vertex");
    }
    if (e.u == e.v) throw GraphError("edge '" + e.id + "' is a self-loop");
    ids.push_back(e.id);
    ends.emplace_back(e.u, e.v);
  }
  check_edge_ids(ids);
  if (bipartition_) check_bipartition(*bipartition_, vertices_.size(), ends, ids);
}

UndirectedGraph UndirectedGraph::from_ids(std::vector<std::string> vertices,
                                          const std::vector<EdgeSpec>& edges,
                                          const std::optional<IdBipartition>& bipartition) {
  auto lookup = index_vertices(vertices);
  std::vector<Edge> built;
  built.reserve(edges.size());
  for (const auto& spec : edges) {
    built.push_back(
        Edge{spec.id, lookup_or_throw(lookup, spec.u), lookup_or_throw(lookup, spec.v)});
  }
  std::optional<Bipartition> b;
  if (bipartition) b = bipartition_from_ids(*bipartition, lookup, vertices.size());
  return UndirectedGraph(std::move(vertices), std::move(built), std::move(b));
}

std::optional<std::size_t> UndirectedGraph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t UndirectedGraph::vertex_index(std::string_view id) const {
  return lookup_or_throw(vertex_lookup_, id);
}

bool UndirectedGraph::is_simple() const {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : edges_) {
    if (!pairs.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
  }
  return true;
}

std::size_t UndirectedGraph::max_degree() const {
  std::vector<std::size_t> degree(vertices_.size(), 0);
  for (const auto& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return *std::max_element(degree.begin(), degree.end());
}

UndirectedGraph UndirectedGraph::with_bipartition(Bipartition b) const {
  return UndirectedGraph(vertices_, edges_, std::move(b));
}

DoubledGraph doubled(const UndirectedGraph& g) {
  std::vector<Arc> arcs;
  std::vector<std::size_t> reversal;
  std::vector<std::size_t> origin;
  arcs.reserve(2 * g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    arcs.push_back(Arc{e.id + "'", e.u, e.v});
    arcs.push_back(Arc{e.id + "''", e.v, e.u});
    reversal.push_back(2 * k + 1);
    reversal.push_back(2 * k);
    origin.push_back(k);
    origin.push_back(k);
  }
  return DoubledGraph{OrientedGraph(g.vertices(), std::move(arcs), g.bipartition()),
                      std::move(reversal), std::move(origin)};
}

BipartiteCheck check_bipartite(const OrientedGraph& g) {
  if (g.bipartition()) return BipartiteCheck{g.bipartition(), {}};
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& a : g.arcs()) ends.emplace_back(a.tail, a.head);
  auto result = two_colour(g.vertices(), ends);
  // a single vertex admits no bipartition with nonempty parts
  if (result.partition && result.partition->part(Side::kV2).empty()) {
    result.partition.reset();
  }
  return result;
}

BipartiteCheck check_bipartite(const UndirectedGraph& g) {
  if (g.bipartition()) return BipartiteCheck{g.bipartition(), {}};
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& e : g.edges()) ends.emplace_back(e.u, e.v);
  auto result = two_colour(g.vertices(), ends);
  if (result.partition && result.partition->part(Side::kV2).empty()) {
    result.partition.reset();
  }
  return result;
}

std::uint64_t deg2(const OrientedGraph& g) {
  std::uint64_t max_out = 0, max_in = 0;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    max_out = std::max<std::uint64_t>(max_out, g.out_arcs(x).size());
    max_in = std::max<std::uint64_t>(max_in, g.in_arcs(x).size());
  }
  return max_out * max_in;
}

}  // namespace zerograph
