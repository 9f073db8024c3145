#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zerograph/cyc8.hpp"
#include "zerograph/graph.hpp"
#include "zerograph/multiaffine.hpp"

namespace zerograph {

/// Per-vertex constants of the vertex factor
///   p_x = (a_out[x] + sum of z'_e over arcs leaving x)
///       * (a_in[x]  + sum of z''_e over arcs entering x),
/// replaced by 1 + p_x where tilde[x] is set.
struct AScheme {
  std::vector<Cyc8> a_out;
  std::vector<Cyc8> a_in;
  std::vector<bool> tilde;

  /// a_out = a_in = 1 everywhere.
  static AScheme ones(const OrientedGraph& g);
  /// a_out = z on V1, conj(z) on V2 (z = (1+i)/sqrt2); a_in = conj(a_out).
  /// Uses the graph's own bipartition; throws GraphError when it has none.
  static AScheme zeta_bipartite(const OrientedGraph& g);
  static AScheme zeta_bipartite(const OrientedGraph& g, const Bipartition& b);
  /// a_out = a_in = 1 on the listed vertices, 0 elsewhere.
  static AScheme v0(const OrientedGraph& g, const std::vector<std::size_t>& members);

  AScheme& set_tilde(const std::vector<std::size_t>& vertices);
};

/// Names of the split and contracted variables for arc id e:
/// "z'[e]", "z''[e]" and e itself.
std::string out_var(std::string_view arc_id);
std::string in_var(std::string_view arc_id);

/// [z'[e]...] ++ [z''[e]...] ++ [e...] in arc order.
std::vector<std::string> engine_universe(const OrientedGraph& g);
/// Arc ids in arc order; the universe of contracted polynomials.
std::vector<std::string> arc_universe(const OrientedGraph& g);

/// Expanded vertex factor of x over engine_universe(g).
MultiAffinePoly vertex_factor(const OrientedGraph& g, std::size_t x, const AScheme& scheme);

/// Writes p = A + B*v1 + C*v2 + D*v1*v2 and returns A + D*target.
/// target must be in the universe and absent from every term other than
/// through v1 or v2.
MultiAffinePoly asano_contract(const MultiAffinePoly& p, std::string_view v1, std::string_view v2,
                               std::string_view target);

/// Product of all vertex factors with every pair (z'[e], z''[e]) contracted
/// to e. Vertices are multiplied in in order and each arc is contracted as
/// soon as both of its endpoints are in. Result is over arc_universe(g).
MultiAffinePoly contract_graph(const OrientedGraph& g, const AScheme& scheme);

/// All variables set equal to z: entry k sums the coefficients of k-sets.
/// Trailing zeros trimmed.
std::vector<Cyc8> specialize(const MultiAffinePoly& p);

}  // namespace zerograph
