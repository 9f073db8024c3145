#include "zerograph/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

namespace zerograph {

namespace {

void require_enumerable(std::size_t count) {
  if (count > kMaxEnumArcs) {
    throw GraphError("enumeration supports at most " + std::to_string(kMaxEnumArcs) + " arcs");
  }
}

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Groups the given (u, v) incidences of the selected items into connected
// components; returns the item indices of each component, ordered by the
// lowest item index.
template <typename EndsOf>
std::vector<std::vector<std::size_t>> group_by_shared_endpoint(std::size_t vertex_count,
                                                               Subgraph f, EndsOf ends_of) {
  DisjointSets sets(vertex_count);
  const auto items = f.members();
  for (std::size_t i : items) {
    auto [u, v] = ends_of(i);
    sets.unite(u, v);
  }
  std::map<std::size_t, std::size_t> slot;  // root -> output index
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i : items) {
    const std::size_t root = sets.find(ends_of(i).first);
    auto [it, fresh] = slot.emplace(root, out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(i);
  }
  return out;
}

std::optional<Bipartition> resolve_bipartition(const OrientedGraph& g,
                                               const std::optional<Bipartition>& explicit_b) {
  if (explicit_b) {
    g.with_bipartition(*explicit_b);  // throws unless every arc crosses it
    return explicit_b;
  }
  return g.bipartition();
}

bool all_components_even(const OrientedGraph& g, Subgraph f) {
  for (const auto& c : decompose(g, f).components) {
    if (c.size() % 2 != 0) return false;
  }
  return true;
}

// Backtracking over arcs from the highest index down, excluding before
// including, so members come out in ascending mask order.
void unbranched_walk(const OrientedGraph& g, const std::function<void(Subgraph)>& visit) {
  require_enumerable(g.arc_count());
  std::vector<std::uint8_t> out_used(g.vertex_count(), 0), in_used(g.vertex_count(), 0);
  Subgraph current;
  std::function<void(std::size_t)> step = [&](std::size_t remaining) {
    if (remaining == 0) {
      visit(current);
      return;
    }
    const std::size_t i = remaining - 1;
    step(i);
    const Arc& a = g.arc(i);
    if (out_used[a.tail] || in_used[a.head]) return;
    out_used[a.tail] = in_used[a.head] = 1;
    current.mask |= std::uint64_t{1} << i;
    step(i);
    current.mask &= ~(std::uint64_t{1} << i);
    out_used[a.tail] = in_used[a.head] = 0;
  };
  step(g.arc_count());
}

Cyc8 zeta_out(const Bipartition& b, std::size_t x) {
  return b.side[x] == Side::kV1 ? Cyc8::zeta() : Cyc8::zeta().conj();
}

}  // namespace

std::size_t Subgraph::size() const { return static_cast<std::size_t>(std::popcount(mask)); }

std::vector<std::size_t> Subgraph::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t w = mask; w; w &= w - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
  }
  return out;
}

bool is_unbranched(const OrientedGraph& g, Subgraph f) {
  std::vector<std::uint8_t> out(g.vertex_count(), 0), in(g.vertex_count(), 0);
  for (std::size_t i : f.members()) {
    const Arc& a = g.arc(i);
    if (++out[a.tail] > 1 || ++in[a.head] > 1) return false;
  }
  return true;
}

bool is_loop_subgraph(const OrientedGraph& g, Subgraph f) {
  if (!is_unbranched(g, f)) return false;
  std::vector<int> balance(g.vertex_count(), 0);
  for (std::size_t i : f.members()) {
    ++balance[g.arc(i).tail];
    --balance[g.arc(i).head];
  }
  return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

ComponentDecomposition decompose(const OrientedGraph& g, Subgraph f) {
  if (!is_unbranched(g, f)) throw GraphError("decompose: subgraph is branched");
  auto groups = group_by_shared_endpoint(g.vertex_count(), f, [&](std::size_t i) {
    return std::pair{g.arc(i).tail, g.arc(i).head};
  });

  ComponentDecomposition out;
  std::vector<int> out_deg(g.vertex_count(), 0), in_deg(g.vertex_count(), 0);
  for (const auto& arcs : groups) {
    Component c;
    for (std::size_t i : arcs) {
      c.arcs.mask |= std::uint64_t{1} << i;
      ++out_deg[g.arc(i).tail];
      ++in_deg[g.arc(i).head];
      c.vertices.push_back(g.arc(i).tail);
      c.vertices.push_back(g.arc(i).head);
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());

    c.kind = ComponentKind::kLoop;
    for (std::size_t x : c.vertices) {
      if (out_deg[x] == 1 && in_deg[x] == 0) {
        c.kind = ComponentKind::kPath;
        c.start = x;
      } else if (in_deg[x] == 1 && out_deg[x] == 0) {
        c.kind = ComponentKind::kPath;
        c.end = x;
      }
    }
    for (std::size_t x : c.vertices) out_deg[x] = in_deg[x] = 0;
    out.components.push_back(std::move(c));
  }
  return out;
}

void for_each_member(const OrientedGraph& g, Family family,
                     const std::function<void(Subgraph)>& visit,
                     const std::optional<Bipartition>& bipartition) {
  switch (family) {
    case Family::kUnbranched:
      unbranched_walk(g, visit);
      return;
    case Family::kLoop:
      unbranched_walk(g, [&](Subgraph f) {
        if (is_loop_subgraph(g, f)) visit(f);
      });
      return;
    case Family::kUnbranchedEven:
      if (!resolve_bipartition(g, bipartition)) {
        throw GraphError("U_even enumeration needs a verified bipartition");
      }
      unbranched_walk(g, [&](Subgraph f) {
        if (all_components_even(g, f)) visit(f);
      });
      return;
  }
}

std::vector<Subgraph> enum_family(const OrientedGraph& g, Family family,
                                  const std::optional<Bipartition>& bipartition) {
  std::vector<Subgraph> out;
  for_each_member(g, family, [&](Subgraph f) { out.push_back(f); }, bipartition);
  return out;
}

IntPoly poly_family(const OrientedGraph& g, Family family,
                    const std::optional<Bipartition>& bipartition) {
  std::vector<std::uint64_t> counts(g.arc_count() + 1, 0);
  for_each_member(g, family, [&](Subgraph f) { ++counts[f.size()]; }, bipartition);
  std::vector<mpz_class> coeffs;
  for (auto c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(coeffs));
}

IntPoly poly_even_components(const OrientedGraph& g) {
  std::vector<std::uint64_t> counts(g.arc_count() + 1, 0);
  unbranched_walk(g, [&](Subgraph f) {
    if (all_components_even(g, f)) ++counts[f.size()];
  });
  std::vector<mpz_class> coeffs;
  for (auto c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(coeffs));
}

FlaggedPoly poly_v0(const OrientedGraph& g, const std::vector<std::size_t>& v0) {
  std::vector<bool> free_vertex(g.vertex_count(), false);
  for (std::size_t x : v0) {
    if (x >= g.vertex_count()) throw GraphError("V0 names a vertex outside the graph");
    free_vertex[x] = true;
  }
  std::vector<std::uint64_t> counts(g.arc_count() + 1, 0);
  unbranched_walk(g, [&](Subgraph f) {
    std::vector<std::uint8_t> out(g.vertex_count(), 0), in(g.vertex_count(), 0);
    for (std::size_t i : f.members()) {
      ++out[g.arc(i).tail];
      ++in[g.arc(i).head];
    }
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      if (!free_vertex[x] && (out[x] != 1 || in[x] != 1)) return;
    }
    ++counts[f.size()];
  });
  std::vector<mpz_class> coeffs;
  for (auto c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  FlaggedPoly result{IntPoly(std::move(coeffs)), false};
  result.identically_zero = result.poly.is_zero();
  return result;
}

MultiAffinePoly multivar_P(const OrientedGraph& g, WeightScheme scheme,
                           const std::optional<Bipartition>& bipartition) {
  std::optional<Bipartition> b;
  if (scheme == WeightScheme::kZetaBipartite) {
    b = resolve_bipartition(g, bipartition);
    if (!b) throw GraphError("zeta-bipartite weights need a verified bipartition");
  }
  std::vector<std::string> universe;
  for (const auto& a : g.arcs()) universe.push_back(a.id);
  MultiAffinePoly out(std::move(universe));

  unbranched_walk(g, [&](Subgraph f) {
    Cyc8 weight(1);
    if (b) {
      for (const auto& c : decompose(g, f).components) {
        if (c.kind == ComponentKind::kPath) {
          weight *= zeta_out(*b, c.start).conj() * zeta_out(*b, c.end);
        }
      }
    }
    VarSet mono;
    for (std::size_t i : f.members()) mono.set(i);
    out.add_term(mono, weight);
  });
  return out;
}

MultiAffinePoly multivar_P_v0(const OrientedGraph& g, const std::vector<std::size_t>& v0) {
  std::vector<bool> free_vertex(g.vertex_count(), false);
  for (std::size_t x : v0) {
    if (x >= g.vertex_count()) throw GraphError("V0 names a vertex outside the graph");
    free_vertex[x] = true;
  }
  std::vector<std::string> universe;
  for (const auto& a : g.arcs()) universe.push_back(a.id);
  MultiAffinePoly out(std::move(universe));

  unbranched_walk(g, [&](Subgraph f) {
    std::vector<std::uint8_t> deg_out(g.vertex_count(), 0), deg_in(g.vertex_count(), 0);
    for (std::size_t i : f.members()) {
      ++deg_out[g.arc(i).tail];
      ++deg_in[g.arc(i).head];
    }
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      if (!free_vertex[x] && (deg_out[x] != 1 || deg_in[x] != 1)) return;
    }
    VarSet mono;
    for (std::size_t i : f.members()) mono.set(i);
    out.add_term(mono, Cyc8(1));
  });
  return out;
}

PairingResult pairing_check(const OrientedGraph& g) {
  using Key = std::tuple<std::vector<std::size_t>, std::size_t, std::size_t, std::size_t>;
  std::map<Key, std::size_t> groups;
  std::vector<std::pair<Key, Subgraph>> members;

  unbranched_walk(g, [&](Subgraph f) {
    if (f.mask == 0 || f.size() % 2 == 0) return;
    auto d = decompose(g, f);
    if (d.components.size() != 1) return;
    const Component& c = d.components.front();
    if (c.kind == ComponentKind::kLoop) return;
    Key key{c.vertices, c.size(), c.start, c.end};
    ++groups[key];
    members.emplace_back(std::move(key), f);
  });

  for (const auto& [key, f] : members) {
    const auto& [vertices, size, start, end] = key;
    auto mirror = groups.find(Key{vertices, size, end, start});
    const std::size_t mirrored = mirror == groups.end() ? 0 : mirror->second;
    if (mirrored != groups.at(key)) return PairingResult{false, f};
  }
  return PairingResult{true, std::nullopt};
}

std::vector<Subgraph> enum_undirected_unbranched(const UndirectedGraph& g) {
  require_enumerable(g.edge_count());
  std::vector<std::uint8_t> degree(g.vertex_count(), 0);
  std::vector<Subgraph> out;
  Subgraph current;
  std::function<void(std::size_t)> step = [&](std::size_t remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    const std::size_t i = remaining - 1;
    step(i);
    const Edge& e = g.edges()[i];
    if (degree[e.u] >= 2 || degree[e.v] >= 2) return;
    ++degree[e.u];
    ++degree[e.v];
    current.mask |= std::uint64_t{1} << i;
    step(i);
    current.mask &= ~(std::uint64_t{1} << i);
    --degree[e.u];
    --degree[e.v];
  };
  step(g.edge_count());
  return out;
}

IntPoly poly_undirected_unbranched(const UndirectedGraph& g) {
  IntPoly p;
  for (Subgraph f : enum_undirected_unbranched(g)) p.add_to(f.size(), 1);
  return p;
}

std::vector<std::size_t> undirected_component_sizes(const UndirectedGraph& g, Subgraph f) {
  auto groups = group_by_shared_endpoint(g.vertex_count(), f, [&](std::size_t i) {
    return std::pair{g.edges()[i].u, g.edges()[i].v};
  });
  std::vector<std::size_t> sizes;
  for (const auto& grp : groups) sizes.push_back(grp.size());
  return sizes;
}

IntPoly closed_form_oriented_unbranched(const UndirectedGraph& g) {
  if (!g.is_simple()) throw GraphError("closed form needs a simple graph");
  const IntPoly single{0, 2, 1};  // 2z + z^2
  IntPoly total;
  for (Subgraph f : enum_undirected_unbranched(g)) {
    IntPoly term{1};
    for (std::size_t k : undirected_component_sizes(g, f)) {
      term = term * (k == 1 ? single : IntPoly::monomial(k, 2));
    }
    total += term;
  }
  return total;
}

IntPoly closed_form_oriented_unbranched_even(const UndirectedGraph& g, EvenFactor factor) {
  if (!g.is_simple()) throw GraphError("closed form needs a simple graph");
  IntPoly total;
  for (Subgraph f : enum_undirected_unbranched(g)) {
    const auto sizes = undirected_component_sizes(g, f);
    if (std::any_of(sizes.begin(), sizes.end(),
                    [](std::size_t k) { return k != 1 && k % 2 != 0; })) {
      continue;
    }
    IntPoly term{1};
    for (std::size_t k : sizes) {
      if (k == 1) {
        term = term * IntPoly::monomial(2);
      } else if (factor == EvenFactor::kCorrected) {
        term = term * IntPoly::monomial(k, 2);
      } else {
        mpz_class two_k;
        mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
        term = term * IntPoly::monomial(k, two_k);
      }
    }
    total += term;
  }
  return total;
}

}  // namespace zerograph
