#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zerograph/graph.hpp"
#include "zerograph/int_poly.hpp"
#include "zerograph/multiaffine.hpp"

namespace zerograph {

/// Enumerations index arcs (or undirected edges) by a 64-bit mask.
inline constexpr std::size_t kMaxEnumArcs = 64;

/// Subset of the arcs of a fixed graph; bit i is arc i in input order.
struct Subgraph {
  std::uint64_t mask = 0;

  bool contains(std::size_t i) const { return (mask >> i) & 1U; }
  std::size_t size() const;
  std::vector<std::size_t> members() const;

  friend auto operator<=>(const Subgraph&, const Subgraph&) = default;
};

enum class ComponentKind { kLoop, kPath };

struct Component {
  Subgraph arcs;
  ComponentKind kind = ComponentKind::kPath;
  std::size_t start = 0;  // path only: the vertex with no ingoing arc
  std::size_t end = 0;    // path only: the vertex with no outgoing arc
  std::vector<std::size_t> vertices;  // ascending vertex indices

  std::size_t size() const { return arcs.size(); }
};

/// Components ordered by their lowest arc index.
struct ComponentDecomposition {
  std::vector<Component> components;
};

enum class Family { kUnbranched, kLoop, kUnbranchedEven };

bool is_unbranched(const OrientedGraph& g, Subgraph f);
bool is_loop_subgraph(const OrientedGraph& g, Subgraph f);

/// Splits an unbranched subgraph into its connected components (arcs sharing
/// an endpoint, regardless of direction). Throws GraphError on branched input.
ComponentDecomposition decompose(const OrientedGraph& g, Subgraph f);

/// Visits every member of the family once, in ascending mask order.
/// kUnbranchedEven needs a bipartition: the explicit one (validated against
/// g) or else g's own; GraphError if neither exists.
void for_each_member(const OrientedGraph& g, Family family,
                     const std::function<void(Subgraph)>& visit,
                     const std::optional<Bipartition>& bipartition = std::nullopt);

std::vector<Subgraph> enum_family(const OrientedGraph& g, Family family,
                                  const std::optional<Bipartition>& bipartition = std::nullopt);

/// Coefficient of z^k = number of family members with k arcs.
IntPoly poly_family(const OrientedGraph& g, Family family,
                    const std::optional<Bipartition>& bipartition = std::nullopt);

/// Unbranched subgraphs whose components all have even size, on any graph.
/// Agrees with poly_family(g, kUnbranchedEven) whenever g is bipartite.
IntPoly poly_even_components(const OrientedGraph& g);

struct FlaggedPoly {
  IntPoly poly;
  bool identically_zero = false;
};

/// Counts unbranched F with exactly one ingoing and one outgoing arc at
/// every vertex outside v0.
FlaggedPoly poly_v0(const OrientedGraph& g, const std::vector<std::size_t>& v0);

enum class WeightScheme { kOnes, kZetaBipartite };

/// Direct expansion over U(E): each F contributes the product over its
/// components of weight(F_j) times the arc variables of F, where loops weigh
/// 1 and a path from x' to x'' weighs a_in(x') * a_out(x''). Over the arc-id
/// universe.
MultiAffinePoly multivar_P(const OrientedGraph& g, WeightScheme scheme,
                           const std::optional<Bipartition>& bipartition = std::nullopt);

/// Indicator expansion for the V0 scheme: F in U(E) contributes its
/// monomial with coefficient 1 iff every vertex outside v0 has in = out = 1.
MultiAffinePoly multivar_P_v0(const OrientedGraph& g, const std::vector<std::size_t>& v0);

struct PairingResult {
  bool passed = true;
  std::optional<Subgraph> witness;  // connected member without a counterpart
};

/// Groups connected non-loop members of U(E) of odd size by
/// (vertex set, size, start, end) and requires every group to be matched in
/// size by the group with start and end swapped.
PairingResult pairing_check(const OrientedGraph& g);

/// Edge subsets with every vertex of degree at most 2 (bit i = edge i).
std::vector<Subgraph> enum_undirected_unbranched(const UndirectedGraph& g);
IntPoly poly_undirected_unbranched(const UndirectedGraph& g);

/// Sizes of the connected components of an edge subset.
std::vector<std::size_t> undirected_component_sizes(const UndirectedGraph& g, Subgraph f);

/// Sum over unbranched F of prod (2z + z^2) over single-edge components
/// times prod 2 z^|F_j| over larger ones. Requires a simple graph.
IntPoly closed_form_oriented_unbranched(const UndirectedGraph& g);

enum class EvenFactor {
  kCorrected,  // 2 * z^k per even component
  kLiteral,    // (2z)^k per even component
};

/// Sum over F whose components have size 1 or even size of
/// z^(2 * #single-edge components) times a factor per even component.
/// Only kCorrected matches the doubled-graph enumeration.
IntPoly closed_form_oriented_unbranched_even(const UndirectedGraph& g,
                                             EvenFactor factor = EvenFactor::kCorrected);

}  // namespace zerograph
