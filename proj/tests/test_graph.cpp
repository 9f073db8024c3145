#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "zerograph/graph.hpp"
#include "zerograph/graph_io.hpp"
#include "zerograph/random_graph.hpp"

using namespace zerograph;

TEST_CASE("parse directed, self-loop and undirected documents") {
  auto g = parse_graph(R"({"directed":true,"vertices":["1","2"],"edges":[{"id":"a","tail":"1","head":"2"}]})");
  REQUIRE(std::holds_alternative<OrientedGraph>(g));
  CHECK(std::get<OrientedGraph>(g).vertex_count() == 2);
  CHECK(std::get<OrientedGraph>(g).arc_count() == 1);

  CHECK_THROWS_AS(
      parse_graph(R"({"directed":true,"vertices":["1"],"edges":[{"id":"a","tail":"1","head":"1"}]})"),
      GraphError);

  auto u = parse_graph(
      R"({"directed":false,"vertices":["1","2","3"],"edges":[{"id":"a","ends":["1","2"]},{"id":"b","ends":["2","3"]}]})");
  REQUIRE(std::holds_alternative<UndirectedGraph>(u));
  CHECK(std::get<UndirectedGraph>(u) == fixture::p3());
}

TEST_CASE("malformed graph documents are rejected") {
  CHECK_THROWS_AS(parse_graph("{"), GraphError);
  CHECK_THROWS_AS(parse_graph(R"({"directed":true,"vertices":[],"edges":[]})"), GraphError);
  CHECK_THROWS_AS(parse_graph(R"({"directed":true,"vertices":["1","1"],"edges":[]})"), GraphError);
  CHECK_THROWS_AS(parse_graph(R"({"directed":true,"vertices":["1"],"edges":[],"extra":1})"),
                  GraphError);
  CHECK_THROWS_AS(
      parse_graph(R"({"directed":true,"vertices":["1","2"],"edges":[{"id":"a","tail":"1","head":"9"}]})"),
      GraphError);
  CHECK_THROWS_AS(
      parse_graph(R"({"directed":true,"vertices":["1","2"],"edges":[{"id":"a","tail":"1","head":"2"}],
                     "bipartition":{"V1":["1","2"],"V2":[]}})"),
      GraphError);
}

TEST_CASE("doubling") {
  auto d = doubled(fixture::edge());
  REQUIRE(d.graph.arc_count() == 2);
  CHECK(d.graph.arc(0).id == "a'");
  CHECK(d.graph.arc(1).id == "a''");
  CHECK(d.graph.arc(0).tail == 0);
  CHECK(d.graph.arc(0).head == 1);
  CHECK(d.graph.arc(1).tail == 1);
  CHECK(d.graph.arc(1).head == 0);

  auto p = doubled(fixture::p3());
  CHECK(p.graph.arc_count() == 4);
  CHECK(p.reversal == std::vector<std::size_t>{1, 0, 3, 2});
  CHECK(p.origin == std::vector<std::size_t>{0, 0, 1, 1});

  CHECK(doubled(fixture::empty3()).graph.arc_count() == 0);

  auto b = fixture::p3().with_bipartition(Bipartition{{Side::kV1, Side::kV2, Side::kV1}});
  REQUIRE(doubled(b).graph.bipartition());
  CHECK(*doubled(b).graph.bipartition() == *b.bipartition());
}

TEST_CASE("bipartite check examples") {
  auto p = check_bipartite(doubled(fixture::p3()).graph);
  REQUIRE(p);
  CHECK(p.partition->part(Side::kV1) == std::vector<std::size_t>{0, 2});
  CHECK(p.partition->part(Side::kV2) == std::vector<std::size_t>{1});

  auto t = check_bipartite(fixture::triangle());
  CHECK_FALSE(t);
  CHECK(t.odd_cycle.size() == 3);

  auto a = check_bipartite(fixture::single_arc());
  REQUIRE(a);
  CHECK(a.partition->part(Side::kV1) == std::vector<std::size_t>{0});
  CHECK(a.partition->part(Side::kV2) == std::vector<std::size_t>{1});
}

TEST_CASE("bipartite check agrees with exhaustive colouring") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 2 + rng.below(7);
    const std::size_t m = rng.below(10);
    auto g = random_oriented(n, m, rng.next());
    auto check = check_bipartite(g);
    auto brute = oracle::two_colouring(n, oracle::pairs(g));
    REQUIRE(static_cast<bool>(check) == brute.has_value());
    if (check) {
      for (const auto& a : g.arcs()) CHECK(check.partition->side[a.tail] != check.partition->side[a.head]);
    } else {
      const auto& c = check.odd_cycle;
      REQUIRE(c.size() % 2 == 1);
      for (std::size_t k = 0; k < c.size(); ++k) {
        const std::size_t x = c[k], y = c[(k + 1) % c.size()];
        bool adjacent = false;
        for (const auto& a : g.arcs()) {
          adjacent |= (a.tail == x && a.head == y) || (a.tail == y && a.head == x);
        }
        CHECK(adjacent);
      }
    }
  }
}

TEST_CASE("deg2 examples") {
  CHECK(deg2(fixture::triangle()) == 1);
  CHECK(deg2(doubled(fixture::p3()).graph) == 4);
  CHECK(deg2(OrientedGraph::from_ids({"1", "2"}, {})) == 0);
}

TEST_CASE("deg2 of a doubled graph is the squared max degree") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto g = random_simple(6, seed % 12, seed);
    const auto d = g.max_degree();
    CHECK(deg2(doubled(g).graph) == d * d);
  }
}

TEST_CASE("random graph examples") {
  auto g = std::get<OrientedGraph>(random_graph(RandomKind::kOriented, 3, 0, 99));
  CHECK(g.vertex_count() == 3);
  CHECK(g.arc_count() == 0);
  CHECK(random_graph(RandomKind::kOriented, 4, 6, 1) == random_graph(RandomKind::kOriented, 4, 6, 1));
  CHECK_THROWS_AS(random_graph(RandomKind::kSimpleUndirected, 2, 2, 5), GraphError);
  CHECK_THROWS_AS(random_graph(RandomKind::kBipartiteUndirected, 3, 3, 5), GraphError);
}

TEST_CASE("random generators respect their kinds") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto s = random_simple(6, seed % 16, seed);
    CHECK(s.is_simple());
    CHECK(s.edge_count() == seed % 16);
    auto b = random_bipartite(7, seed % 13, seed);
    CHECK(b.is_simple());
    REQUIRE(b.bipartition());
    for (const auto& e : b.edges()) CHECK(b.bipartition()->side[e.u] != b.bipartition()->side[e.v]);
  }
}

TEST_CASE("serialize then parse is the identity") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    for (auto kind : {RandomKind::kOriented, RandomKind::kBipartiteUndirected,
                      RandomKind::kSimpleUndirected}) {
      auto g = random_graph(kind, 5, seed % 6, seed);
      CHECK(parse_graph(serialize(g)) == g);
    }
    AnyGraph d = doubled(random_bipartite(5, seed % 6, seed)).graph;
    CHECK(parse_graph(serialize(d)) == d);
  }
}

TEST_CASE("reversal flips every arc and keeps ids") {
  auto g = fixture::triangle().reversed();
  CHECK(g.arc(0).id == "a");
  CHECK(g.arc(0).tail == 1);
  CHECK(g.arc(0).head == 0);
  CHECK(g.reversed() == fixture::triangle());
}
