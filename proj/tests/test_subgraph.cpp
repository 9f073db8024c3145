#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "zerograph/random_graph.hpp"
#include "zerograph/subgraph.hpp"

using namespace zerograph;

namespace {

Subgraph mask_of(const OrientedGraph& g, std::initializer_list<const char*> ids) {
  Subgraph f;
  for (const char* id : ids) f.mask |= std::uint64_t{1} << *g.find_arc(id);
  return f;
}

std::vector<std::uint64_t> masks(const std::vector<Subgraph>& fs) {
  std::vector<std::uint64_t> out;
  for (auto f : fs) out.push_back(f.mask);
  return out;
}

OrientedGraph doubled_p3() { return doubled(fixture::p3()).graph; }

OrientedGraph doubled_edge() { return doubled(fixture::edge()).graph; }

}  // namespace

TEST_CASE("unbranched and loop predicates") {
  auto t = fixture::triangle();
  CHECK(is_unbranched(t, mask_of(t, {"a", "b"})));
  auto de = doubled_edge();
  CHECK(is_unbranched(de, mask_of(de, {"a'", "a''"})));
  auto par = OrientedGraph::from_ids({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
  CHECK_FALSE(is_unbranched(par, mask_of(par, {"a", "b"})));

  CHECK(is_loop_subgraph(t, mask_of(t, {"a", "b", "c"})));
  CHECK_FALSE(is_loop_subgraph(t, mask_of(t, {"a"})));
  CHECK(is_loop_subgraph(t, Subgraph{}));
}

TEST_CASE("decompose examples") {
  auto d = doubled_p3();
  auto one = decompose(d, mask_of(d, {"a'", "b'"}));
  REQUIRE(one.components.size() == 1);
  CHECK(one.components[0].kind == ComponentKind::kPath);
  CHECK(d.vertices()[one.components[0].start] == "1");
  CHECK(d.vertices()[one.components[0].end] == "3");
  CHECK(one.components[0].size() == 2);

  auto loop = decompose(d, mask_of(d, {"a'", "a''"}));
  REQUIRE(loop.components.size() == 1);
  CHECK(loop.components[0].kind == ComponentKind::kLoop);
  CHECK(loop.components[0].size() == 2);

  auto t = fixture::triangle();
  auto path = decompose(t, mask_of(t, {"a", "c"}));
  REQUIRE(path.components.size() == 1);
  CHECK(t.vertices()[path.components[0].start] == "3");
  CHECK(t.vertices()[path.components[0].end] == "2");

  auto par = OrientedGraph::from_ids({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
  CHECK_THROWS_AS(decompose(par, mask_of(par, {"a", "b"})), GraphError);
}

TEST_CASE("decomposed paths are directed walks from start to end") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto g = random_oriented(6, 9, seed);
    for (auto f : enum_family(g, Family::kUnbranched)) {
      std::size_t total = 0;
      for (const auto& c : decompose(g, f).components) {
        total += c.size();
        if (c.kind != ComponentKind::kPath) continue;
        std::size_t at = c.start, steps = 0;
        bool moved = true;
        while (moved) {
          moved = false;
          for (std::size_t i : c.arcs.members()) {
            if (g.arc(i).tail == at) {
              at = g.arc(i).head;
              ++steps;
              moved = true;
              break;
            }
          }
        }
        CHECK(at == c.end);
        CHECK(steps == c.size());
      }
      CHECK(total == f.size());
    }
  }
}

TEST_CASE("family examples") {
  auto t = fixture::triangle();
  CHECK(enum_family(t, Family::kUnbranched).size() == 8);
  CHECK(masks(enum_family(t, Family::kLoop)) == std::vector<std::uint64_t>{0, 7});

  auto d = doubled_p3();
  auto even = enum_family(d, Family::kUnbranchedEven, check_bipartite(d).partition);
  std::vector<std::uint64_t> expect = {0, mask_of(d, {"a'", "a''"}).mask, mask_of(d, {"b'", "b''"}).mask,
                                       mask_of(d, {"a'", "b'"}).mask, mask_of(d, {"a''", "b''"}).mask};
  std::sort(expect.begin(), expect.end());
  CHECK(masks(even) == expect);

  CHECK(poly_family(t, Family::kUnbranched) == IntPoly{1, 3, 3, 1});
  CHECK(poly_family(d, Family::kUnbranched) == IntPoly{1, 4, 4});
  CHECK(poly_family(d, Family::kUnbranchedEven, check_bipartite(d).partition) == IntPoly{1, 0, 4});
  CHECK_THROWS_AS(poly_family(t, Family::kUnbranchedEven), GraphError);
}

TEST_CASE("families match brute-force subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    SplitMix64 rng(seed);
    auto g = random_oriented(2 + rng.below(6), rng.below(11), rng.next());
    auto ub = oracle::members(g, [&](std::uint64_t m) { return oracle::unbranched(g, m); });
    auto lp = oracle::members(g, [&](std::uint64_t m) { return oracle::loop(g, m); });
    CHECK(masks(enum_family(g, Family::kUnbranched)) == ub);
    CHECK(masks(enum_family(g, Family::kLoop)) == lp);
    CHECK(poly_family(g, Family::kUnbranched) == oracle::count_poly(ub));
    CHECK(poly_even_components(g) == oracle::even_poly(g));
    if (auto b = check_bipartite(g)) {
      CHECK(poly_family(g, Family::kUnbranchedEven, b.partition) == oracle::even_poly(g));
    }
  }
}

TEST_CASE("structural properties of the families") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto g = random_oriented(5, seed % 10, seed);
    auto u = enum_family(g, Family::kUnbranched);
    auto l = enum_family(g, Family::kLoop);
    auto in_u = [&](std::uint64_t m) {
      return std::binary_search(u.begin(), u.end(), Subgraph{m});
    };
    for (auto f : u) {
      for (std::size_t i : f.members()) CHECK(in_u(f.mask & ~(std::uint64_t{1} << i)));
    }
    for (auto f : l) CHECK(in_u(f.mask));
    auto p = poly_family(g, Family::kUnbranched);
    CHECK(p.evaluate(1) == mpz_class(u.size()));
    CHECK(poly_family(g.reversed(), Family::kUnbranched) == p);
    CHECK(poly_family(g.reversed(), Family::kLoop) == poly_family(g, Family::kLoop));
  }
}

TEST_CASE("V0-constrained counting") {
  auto t = fixture::triangle();
  CHECK(poly_v0(t, {0, 1, 2}).poly == IntPoly{1, 3, 3, 1});
  auto one = poly_v0(t, {0});
  CHECK(one.poly == IntPoly::monomial(3));
  CHECK_FALSE(one.identically_zero);
  auto none = poly_v0(fixture::single_arc(), {});
  CHECK(none.identically_zero);
  CHECK(none.poly.is_zero());

  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    SplitMix64 rng(seed);
    auto g = random_oriented(2 + rng.below(5), rng.below(10), rng.next());
    std::vector<std::size_t> v0;
    std::vector<bool> flag(g.vertex_count());
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      if (rng.below(2)) {
        v0.push_back(x);
        flag[x] = true;
      }
    }
    auto got = poly_v0(g, v0);
    auto want = oracle::v0_poly(g, flag);
    CHECK(got.poly == want);
    CHECK(got.identically_zero == want.is_zero());
  }
}

TEST_CASE("direct multivariate expansion") {
  auto t = fixture::triangle();
  auto p = multivar_P(t, WeightScheme::kOnes);
  CHECK(p.coeff(std::vector<std::string>{"a"}) == Cyc8(1));
  CHECK(p.coeff(std::vector<std::string>{"a", "b", "c"}) == Cyc8(1));
  CHECK(p.term_count() == 8);

  auto de = doubled_edge();
  auto z = multivar_P(de, WeightScheme::kZetaBipartite, check_bipartite(de).partition);
  CHECK(z.coeff(std::vector<std::string>{"a'"}) == -Cyc8::imag_unit());
  CHECK(z.coeff(std::vector<std::string>{"a''"}) == Cyc8::imag_unit());
  CHECK(z.coeff(std::vector<std::string>{"a'", "a''"}) == Cyc8(1));
  CHECK_THROWS_AS(multivar_P(de, WeightScheme::kZetaBipartite), GraphError);

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = random_oriented(4, seed % 8, seed);
    CHECK(multivar_P(g, WeightScheme::kOnes).coeff(VarSet{}) == Cyc8(1));
  }
}

TEST_CASE("zeta weights match the contracted-weight formula") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto g0 = random_bipartite(6, seed % 8, seed);
    auto g = doubled(g0).graph;
    const auto& b = *g.bipartition();
    std::vector<Cyc8> a_out, a_in;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      Cyc8 z = b.side[x] == Side::kV1 ? Cyc8::zeta() : Cyc8::zeta().conj();
      a_out.push_back(z);
      a_in.push_back(z.conj());
    }
    auto p = multivar_P(g, WeightScheme::kZetaBipartite);
    for (auto m : oracle::members(g, [&](std::uint64_t s) { return oracle::unbranched(g, s); })) {
      VarSet s;
      for (std::size_t i = 0; i < g.arc_count(); ++i) {
        if ((m >> i) & 1U) s.set(i);
      }
      CHECK(p.coeff(s) == oracle::contracted_weight(g, m, a_out, a_in));
    }
  }
}

TEST_CASE("pairing check") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    CHECK(pairing_check(doubled(random_simple(6, seed % 10, seed)).graph).passed);
  }
  auto t = fixture::triangle();
  auto r = pairing_check(t);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->mask == mask_of(t, {"a"}).mask);
  CHECK(pairing_check(OrientedGraph::from_ids({"1", "2"}, {})).passed);
}

TEST_CASE("undirected unbranched subgraphs") {
  CHECK(masks(enum_undirected_unbranched(fixture::p3())) == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(poly_undirected_unbranched(fixture::p3()) == IntPoly{1, 2, 1});
  CHECK(poly_undirected_unbranched(fixture::edge()) == IntPoly{1, 1});
  CHECK(poly_undirected_unbranched(fixture::utriangle()) == IntPoly{1, 3, 3, 1});
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto g = random_simple(6, seed % 13, seed);
    CHECK(poly_undirected_unbranched(g) == oracle::undirected_unbranched_poly(g));
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_oriented_unbranched(fixture::p3()) == IntPoly{1, 4, 4});
  CHECK(closed_form_oriented_unbranched(fixture::edge()) == IntPoly{1, 2, 1});
  CHECK(closed_form_oriented_unbranched(fixture::empty3()) == IntPoly{1});

  CHECK(closed_form_oriented_unbranched_even(fixture::p3()) == IntPoly{1, 0, 4});
  CHECK(closed_form_oriented_unbranched_even(fixture::p3(), EvenFactor::kLiteral) == IntPoly{1, 0, 6});
  CHECK(closed_form_oriented_unbranched_even(fixture::edge()) == IntPoly{1, 0, 1});
  CHECK(closed_form_oriented_unbranched_even(fixture::empty3()) == IntPoly{1});

  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto g = random_simple(7, seed % 9, seed);
    auto d = doubled(g).graph;
    CHECK(closed_form_oriented_unbranched(g) == oracle::unbranched_poly(d));
    CHECK(closed_form_oriented_unbranched_even(g) == oracle::even_poly(d));
  }
}
