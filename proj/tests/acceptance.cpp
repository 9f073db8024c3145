// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "zerograph/graph.hpp"
#include "zerograph/subgraph.hpp"
#include "zerograph/verify.hpp"

using namespace zerograph;

namespace {

struct Run {
  VerifyReport report;
  std::string dump;
  double seconds = 0;
};

Run run(Suite s, std::size_t trials, std::size_t max_edges, unsigned threads) {
  SuiteParams p = default_params(s);
  p.trials = trials;
  p.max_edges = max_edges;
  const auto t0 = std::chrono::steady_clock::now();
  Run r{run_suite(p, threads), {}, 0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.dump = r.report.to_json().dump(2);
  return r;
}

// Number of trials where checks[key] is true, and the first index where it
// is missing or false.
struct Tally {
  std::size_t ok = 0;
  std::size_t total = 0;
  long first_bad = -1;
  std::string reason;
};

Tally tally(const VerifyReport& r, const std::vector<std::string>& keys) {
  Tally t;
  for (const auto& trial : r.trials) {
    ++t.total;
    bool good = trial.passed;
    for (const auto& k : keys) {
      auto it = trial.checks.find(k);
      good = good && it != trial.checks.end() && it->is_boolean() && it->get<bool>();
    }
    if (good) {
      ++t.ok;
    } else if (t.first_bad < 0) {
      t.first_bad = static_cast<long>(trial.index);
      t.reason = trial.failure.empty() ? "check missing" : trial.failure;
    }
  }
  return t;
}

bool good(const Tally& t, std::size_t expected) { return t.ok == t.total && t.total == expected; }

std::string describe(const Tally& t, double seconds) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu/%zu trials, %.2f s", t.ok, t.total, seconds);
  std::string s = buf;
  if (t.first_bad >= 0) s += "; first failure at trial " + std::to_string(t.first_bad) + ": " + t.reason;
  return s;
}

int failures = 0;

void line(int n, const std::string& what, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %s (%s)\n", pass ? "PASS" : "FAIL", n, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

}  // namespace

int main() {
  const unsigned threads = worker_count();

  // 1: engine vs direct expansion, 300 random + every graph on <= 3 vertices, <= 4 arcs
  Run engine = run(Suite::kEngineEquiv, 300, 8, threads);
  {
    Tally t = tally(engine.report, {"engine_terms_match"});
    std::size_t exhaustive = 0;
    for (const auto& trial : engine.report.trials) exhaustive += trial.source == "exhaustive";
    const std::size_t small = all_small_oriented(3, 4).size();
    line(1, "engine equals direct expansion, term by term",
         good(t, 300 + small) && exhaustive == small && engine.seconds < 60,
         describe(t, engine.seconds) + ", " + std::to_string(exhaustive) + " exhaustive");
  }

  // 2: unbranched polynomial, exact real-negative and deg2 certificates
  Run unbranched = run(Suite::kProp21, 500, 12, threads);
  {
    Tally t = tally(unbranched.report, {"real_negative_proven", "deg2_bound_proven", "evidence_rechecks"});
    line(2, "unbranched zeros real negative and below -1/deg2", good(t, 500) && unbranched.seconds < 300,
         describe(t, unbranched.seconds));
  }

  // 3, 4: doubled bipartite graphs
  Run doubled_even = run(Suite::kProp23, 200, 7, threads);
  {
    Tally t = tally(doubled_even.report, {"pairing_holds", "purely_imaginary_proven", "evidence_rechecks"});
    line(3, "doubled bipartite: pairing holds, even polynomial purely imaginary",
         good(t, 200) && doubled_even.seconds < 180, describe(t, doubled_even.seconds));
    Tally e = tally(doubled_even.report, {"engine_integral", "engine_matches_even"});
    line(4, "zeta-weighted engine gives the even polynomial with integer coefficients", good(e, 200),
         describe(e, doubled_even.seconds));
  }

  // 5: closed form for oriented unbranched subgraphs of the doubled graph
  Run closed = run(Suite::kSec31, 200, 8, threads);
  {
    Tally t = tally(closed.report, {"closed_form_matches"});
    const auto& spots = closed.report.extras["spot_checks"];
    const bool spots_ok = spots.value("P3_ok", false) && spots.value("edge_ok", false);
    line(5, "closed form equals enumeration on doubled graphs; P3 and single-edge spot checks",
         good(t, 200) && spots_ok, describe(t, closed.seconds) + (spots_ok ? ", spots ok" : ", spots FAILED"));
  }

  // 6: even closed form; the (2z)^k factor must fail on P3 and be recorded
  Run closed_even = run(Suite::kSec32, 200, 8, threads);
  {
    Tally t = tally(closed_even.report, {"closed_form_matches"});
    const auto& d = closed_even.report.extras["documented_discrepancy"];
    const bool recorded = d.is_object() && d["corrected_matches"].get<bool>() &&
                          !d["literal_matches"].get<bool>() && d["factor_(2z)^k"] == "1 + 6z^2" &&
                          d["enumeration"] == "1 + 4z^2";
    const auto p3 = UndirectedGraph::from_ids({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    const auto dp3 = doubled(p3).graph;
    const IntPoly oracle = poly_family(dp3, Family::kUnbranchedEven, check_bipartite(dp3).partition);
    const bool literal_fails =
        closed_form_oriented_unbranched_even(p3, EvenFactor::kLiteral) == IntPoly{1, 0, 6} &&
        oracle == IntPoly{1, 0, 4};
    line(6, "corrected even closed form equals enumeration; (2z)^k variant refuted on P3",
         good(t, 200) && recorded && literal_fails,
         describe(t, closed_even.seconds) + (recorded ? ", discrepancy recorded" : ", discrepancy NOT recorded"));
  }

  // 7: V0-constrained counting
  Run v0_runs = run(Suite::kRemark22, 200, 10, threads);
  {
    Tally t = tally(v0_runs.report, {"engine_terms_match", "engine_matches_v0"});
    std::size_t zero = 0, certified = 0;
    bool each = true;
    for (const auto& trial : v0_runs.report.trials) {
      const bool z = trial.checks.value("identically_zero", false);
      zero += z;
      const auto it = trial.checks.find("real_nonpositive_proven");
      const bool c = it != trial.checks.end() && it->get<bool>();
      certified += c;
      each = each && (z || c);
    }
    line(7, "V0 count vanishes or has real nonpositive zeros; engine specializes to it",
         good(t, 200) && each,
         describe(t, v0_runs.seconds) + ", " + std::to_string(zero) + " identically zero, " +
             std::to_string(certified) + " certified");
  }

  // 8: numeric roots agree with every proven certificate of criteria 2 and 3
  {
    Tally a = tally(unbranched.report, {"numeric_agreement"});
    Tally b = tally(doubled_even.report, {"numeric_agreement"});
    double worst_imag = 0, worst_real = 0;
    for (const auto& trial : unbranched.report.trials) {
      worst_imag = std::max(worst_imag, trial.checks.value("max_abs_imag", 1.0));
    }
    for (const auto& trial : doubled_even.report.trials) {
      worst_real = std::max(worst_real, trial.checks.value("max_abs_real", 1.0));
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, ", max |Im| %.2e, max |Re| %.2e", worst_imag, worst_real);
    line(8, "numeric roots agree with certificates within 1e-9",
         good(a, 500) && good(b, 200) && worst_imag < 1e-9 && worst_real < 1e-9,
         std::to_string(a.ok + b.ok) + "/" + std::to_string(a.total + b.total) + " trials" + buf);
  }

  // 9: undirected unbranched polynomial, numeric left half-plane
  Run half = run(Suite::kHalfPlane, 200, 10, threads);
  {
    Tally t = tally(half.report, {"halfplane_negative"});
    double worst = -1e300;
    for (const auto& trial : half.report.trials) {
      worst = std::max(worst, trial.checks.value("max_real_part", -1e300));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, ", max Re %.3g", worst);
    line(9, "undirected unbranched zeros in the open left half-plane (numeric)", good(t, 200),
         describe(t, half.seconds) + buf);
  }

  // 10: identical parameters give byte-identical reports, also across worker counts
  {
    const unsigned other = threads == 1 ? 3 : 1;
    struct Again {
      const char* name;
      const Run* first;
      Suite suite;
      std::size_t trials, edges;
    };
    const std::vector<Again> again = {
        {"engine-equiv", &engine, Suite::kEngineEquiv, 300, 8},
        {"prop21", &unbranched, Suite::kProp21, 500, 12},
        {"prop23", &doubled_even, Suite::kProp23, 200, 7},
        {"sec31", &closed, Suite::kSec31, 200, 8},
        {"sec32", &closed_even, Suite::kSec32, 200, 8},
        {"remark22", &v0_runs, Suite::kRemark22, 200, 10},
        {"halfplane", &half, Suite::kHalfPlane, 200, 10},
    };
    bool same = true;
    std::string differing;
    for (const auto& a : again) {
      if (run(a.suite, a.trials, a.edges, other).dump != a.first->dump ||
          run(a.suite, a.trials, a.edges, threads).dump != a.first->dump) {
        same = false;
        differing += std::string(" ") + a.name;
      }
    }
    line(10, "reruns produce byte-identical reports", same,
         same ? "7 suites, " + std::to_string(threads) + " and " + std::to_string(other) + " workers"
              : "differs:" + differing);
  }

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
