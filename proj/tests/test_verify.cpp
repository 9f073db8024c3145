#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "zerograph/graph_io.hpp"
#include "zerograph/verify.hpp"

using namespace zerograph;

TEST_CASE("suite names round-trip") {
  for (auto s : {Suite::kProp21, Suite::kProp23, Suite::kRemark22, Suite::kSec31, Suite::kSec32,
                 Suite::kEngineEquiv, Suite::kHalfPlane}) {
    CHECK(parse_suite(to_string(s)) == s);
  }
  CHECK_THROWS(parse_suite("nope"));
}

TEST_CASE("trial graphs stay within the caps") {
  for (auto s : {Suite::kProp21, Suite::kProp23, Suite::kSec31}) {
    SuiteParams p = default_params(s);
    for (std::size_t i = 0; i < 100; ++i) {
      auto g = trial_graph(p, i);
      std::visit(
          [&](const auto& graph) {
            CHECK(graph.vertex_count() >= 2);
            CHECK(graph.vertex_count() <= p.max_vertices);
            using T = std::decay_t<decltype(graph)>;
            if constexpr (std::is_same_v<T, OrientedGraph>) {
              CHECK(graph.arc_count() <= p.max_edges);
            } else {
              CHECK(graph.edge_count() <= p.max_edges);
              CHECK(graph.is_simple());
            }
          },
          g);
      CHECK(trial_graph(p, i) == g);
    }
  }
}

TEST_CASE("small oriented graphs are listed once each") {
  auto all = all_small_oriented(3, 4);
  CHECK(all.size() == 226);
  std::set<std::string> seen;
  for (const auto& g : all) seen.insert(serialize(g));
  CHECK(seen.size() == all.size());
  CHECK(all_small_oriented(2, 2).size() == 1 + 1 + 2 + 3);
}

TEST_CASE("reports do not depend on the worker count") {
  for (auto s : {Suite::kProp21, Suite::kRemark22, Suite::kSec32}) {
    SuiteParams p = default_params(s);
    p.trials = 40;
    p.seed = 12345;
    const auto one = run_suite(p, 1).to_json().dump();
    CHECK(run_suite(p, 4).to_json().dump() == one);
    p.seed = 12346;
    CHECK(run_suite(p, 1).to_json().dump() != one);
  }
}

TEST_CASE("report layout") {
  SuiteParams p = default_params(Suite::kProp21);
  p.trials = 5;
  auto j = run_suite(p, 1).to_json();
  CHECK(j["suite"] == "prop21");
  CHECK(j["params"]["trials"] == 5);
  CHECK(j["summary"]["passed"] == 5);
  CHECK(j["trials"].size() == 5);
  CHECK(j["failures"].empty());
  CHECK(j["trials"][0]["digest"].get<std::string>().size() == 16);
}

TEST_CASE("failing trials carry the full graph and a replay command") {
  VerifyReport r;
  r.params = default_params(Suite::kProp21);
  TrialOutcome t;
  t.index = 7;
  t.source = "random";
  t.graph = fixture::triangle();
  t.passed = false;
  t.failure = "example";
  t.replay = "zerograph poly --family unbranched witness.json";
  r.trials.push_back(t);
  CHECK(r.failed() == 1);
  auto j = r.to_json();
  REQUIRE(j["failures"].size() == 1);
  CHECK(j["failures"][0]["index"] == 7);
  CHECK(j["failures"][0]["reason"] == "example");
  CHECK(parse_graph(j["failures"][0]["graph"].dump()) == AnyGraph(fixture::triangle()));
  CHECK(j["failures"][0]["replay"] == t.replay);
}
