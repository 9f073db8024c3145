#include "zerograph/asano.hpp"

#include <algorithm>

namespace zerograph {

AScheme AScheme::ones(const OrientedGraph& g) {
  const std::size_t n = g.vertex_count();
  return AScheme{std::vector<Cyc8>(n, Cyc8(1)), std::vector<Cyc8>(n, Cyc8(1)),
                 std::vector<bool>(n, false)};
}

AScheme AScheme::zeta_bipartite(const OrientedGraph& g) {
  if (!g.bipartition()) throw GraphError("zeta-bipartite scheme needs a bipartition");
  return zeta_bipartite(g, *g.bipartition());
}

AScheme AScheme::zeta_bipartite(const OrientedGraph& g, const Bipartition& b) {
  // constructing the graph with b validates that every arc crosses it
  const OrientedGraph checked = g.with_bipartition(b);
  AScheme s;
  for (std::size_t x = 0; x < checked.vertex_count(); ++x) {
    Cyc8 a = b.side[x] == Side::kV1 ? Cyc8::zeta() : Cyc8::zeta().conj();
    s.a_in.push_back(a.conj());
    s.a_out.push_back(std::move(a));
  }
  s.tilde.assign(g.vertex_count(), false);
  return s;
}

AScheme AScheme::v0(const OrientedGraph& g, const std::vector<std::size_t>& members) {
  const std::size_t n = g.vertex_count();
  AScheme s{std::vector<Cyc8>(n, Cyc8(0)), std::vector<Cyc8>(n, Cyc8(0)),
            std::vector<bool>(n, false)};
  for (std::size_t x : members) {
    if (x >= n) throw GraphError("V0 names a vertex outside the graph");
    s.a_out[x] = 1;
    s.a_in[x] = 1;
  }
  return s;
}

AScheme& AScheme::set_tilde(const std::vector<std::size_t>& vertices) {
  for (std::size_t x : vertices) tilde.at(x) = true;
  return *this;
}

std::string out_var(std::string_view arc_id) { return "z'[" + std::string(arc_id) + "]"; }
std::string in_var(std::string_view arc_id) { return "z''[" + std::string(arc_id) + "]"; }

std::vector<std::string> engine_universe(const OrientedGraph& g) {
  std::vector<std::string> names;
  names.reserve(3 * g.arc_count());
  for (const auto& a : g.arcs()) names.push_back(out_var(a.id));
  for (const auto& a : g.arcs()) names.push_back(in_var(a.id));
  for (const auto& a : g.arcs()) names.push_back(a.id);
  return names;
}

std::vector<std::string> arc_universe(const OrientedGraph& g) {
  std::vector<std::string> names;
  for (const auto& a : g.arcs()) names.push_back(a.id);
  return names;
}

MultiAffinePoly vertex_factor(const OrientedGraph& g, std::size_t x, const AScheme& scheme) {
  if (x >= g.vertex_count()) throw GraphError("vertex_factor: unknown vertex");
  if (scheme.a_out.size() != g.vertex_count() || scheme.a_in.size() != g.vertex_count() ||
      scheme.tilde.size() != g.vertex_count()) {
    throw GraphError("vertex_factor: scheme does not match the graph");
  }
  const std::size_t m = g.arc_count();
  auto universe = engine_universe(g);

  MultiAffinePoly outgoing = MultiAffinePoly::constant(universe, scheme.a_out[x]);
  for (std::size_t e : g.out_arcs(x)) outgoing.add_term(VarSet{e}, Cyc8(1));
  MultiAffinePoly ingoing = MultiAffinePoly::constant(universe, scheme.a_in[x]);
  for (std::size_t e : g.in_arcs(x)) ingoing.add_term(VarSet{m + e}, Cyc8(1));

  MultiAffinePoly p = multiply(outgoing, ingoing);
  if (scheme.tilde[x]) p.add_term(VarSet{}, Cyc8(1));
  return p;
}

MultiAffinePoly asano_contract(const MultiAffinePoly& p, std::string_view v1, std::string_view v2,
                               std::string_view target) {
  const std::size_t i1 = p.var_index(v1);
  const std::size_t i2 = p.var_index(v2);
  const std::size_t it = p.var_index(target);
  if (i1 == i2) throw AlgebraError("asano_contract: the pair must be two distinct variables");
  VarSet rest = p.support();
  rest.reset(i1);
  rest.reset(i2);
  if (rest.test(it)) {
    throw AlgebraError("asano_contract: target '" + std::string(target) + "' already occurs");
  }

  MultiAffinePoly out(p.universe());
  for (const auto& [s, c] : p.terms()) {
    const bool has1 = s.test(i1), has2 = s.test(i2);
    if (has1 != has2) continue;  // B and C parts are dropped
    VarSet t = s;
    if (has1) {
      t.reset(i1);
      t.reset(i2);
      t.set(it);
    }
    out.add_term(t, c);
  }
  return out;
}

MultiAffinePoly contract_graph(const OrientedGraph& g, const AScheme& scheme) {
  const auto universe = engine_universe(g);
  MultiAffinePoly acc = MultiAffinePoly::constant(universe, Cyc8(1));
  std::vector<bool> done(g.vertex_count(), false);

  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    acc = multiply(acc, vertex_factor(g, x, scheme));
    done[x] = true;

    std::vector<std::size_t> incident = g.out_arcs(x);
    incident.insert(incident.end(), g.in_arcs(x).begin(), g.in_arcs(x).end());
    std::sort(incident.begin(), incident.end());
    for (std::size_t e : incident) {
      const Arc& a = g.arc(e);
      const std::size_t other = a.tail == x ? a.head : a.tail;
      if (!done[other]) continue;
      acc = asano_contract(acc, out_var(a.id), in_var(a.id), a.id);
    }
  }
  return acc.restrict_universe(arc_universe(g));
}

std::vector<Cyc8> specialize(const MultiAffinePoly& p) {
  std::vector<Cyc8> coeffs;
  for (const auto& [s, c] : p.terms()) {
    const std::size_t k = s.count();
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] += c;
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

}  // namespace zerograph
