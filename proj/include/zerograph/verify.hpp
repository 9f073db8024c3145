#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zerograph/random_graph.hpp"

namespace zerograph {

enum class Suite {
  kProp21,       // unbranched polynomial: real negative zeros, deg2 bound
  kProp23,       // doubled bipartite graphs: even polynomial, imaginary zeros
  kRemark22,     // V0-constrained counting: real nonpositive zeros
  kSec31,        // closed form for oriented unbranched subgraphs of E0
  kSec32,        // closed form for even oriented unbranched subgraphs of E0
  kEngineEquiv,  // contraction engine vs direct expansion, term by term
  kHalfPlane,    // undirected unbranched polynomial: numeric Re < 0 check
};

Suite parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct SuiteParams {
  Suite suite = Suite::kProp21;
  std::size_t trials = 0;
  std::size_t max_edges = 0;
  std::size_t max_vertices = 0;
  std::uint64_t seed = 0;
};

/// Trial counts and size caps used when the caller does not override them.
SuiteParams default_params(Suite s);

/// The graph family a suite samples from.
RandomKind suite_kind(Suite s);

/// Graph for trial `index`: a SplitMix64 seeded with
/// seed + 0x9E3779B97F4A7C15 * (index + 1) draws n in [2, max_vertices],
/// then m in [0, min(max_edges, feasible edge count)], then the generator
/// seed.
AnyGraph trial_graph(const SuiteParams& params, std::size_t index);

struct TrialOutcome {
  std::size_t index = 0;
  std::string source;  // "random" or "exhaustive"
  std::optional<AnyGraph> graph;
  std::vector<std::string> poly;  // ascending coefficients, when one was built
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  bool passed = false;
  std::string failure;
  std::string replay;
};

struct VerifyReport {
  SuiteParams params;
  std::vector<TrialOutcome> trials;
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();
  double wall_seconds = 0.0;  // not part of the serialized report

  std::size_t failed() const;
  bool passed() const { return failed() == 0; }
  /// Deterministic for fixed params: no timings, trial order by index.
  nlohmann::ordered_json to_json() const;
};

/// Worker count: ZEROGRAPH_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

VerifyReport run_suite(const SuiteParams& params, unsigned threads = worker_count());

/// Every oriented multigraph on 1..max_vertices vertices ("1".."n") with at
/// most max_arcs arcs, up to arc order: arcs are non-decreasing sequences
/// over the ordered vertex pairs.
std::vector<OrientedGraph> all_small_oriented(std::size_t max_vertices, std::size_t max_arcs);

}  // namespace zerograph
