#include "zerograph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include "zerograph/asano.hpp"
#include "zerograph/certify.hpp"
#include "zerograph/numeric_roots.hpp"
#include "zerograph/subgraph.hpp"

namespace zerograph {

namespace {

constexpr double kNumericAgreement = 1e-9;

std::vector<std::string> coeff_strings(const IntPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

std::string verdict(const Certificate& c) { return std::string(to_string(c.verdict)); }

// Records a named boolean check and folds it into the trial outcome.
void expect(TrialOutcome& t, const char* name, bool ok, const std::string& why = {}) {
  t.checks[name] = ok;
  if (!ok && t.failure.empty()) t.failure = why.empty() ? std::string(name) + " failed" : why;
}

// |Im| < tol and Re < 0 for every root (real-negative certificates).
bool numeric_real_negative(const IntPoly& p, double& worst_imag) {
  worst_imag = 0.0;
  if (p.degree() < 1) return true;
  auto roots = numeric_roots(p);
  bool ok = roots.converged;
  for (const auto& r : roots.roots) {
    worst_imag = std::max(worst_imag, std::abs(r.value.imag()));
    ok = ok && std::abs(r.value.imag()) < kNumericAgreement && r.value.real() < 0;
  }
  return ok;
}

// |Re| < tol for every root (purely-imaginary certificates).
bool numeric_imaginary(const IntPoly& p, double& worst_real) {
  worst_real = 0.0;
  if (p.degree() < 1) return true;
  auto roots = numeric_roots(p);
  bool ok = roots.converged;
  for (const auto& r : roots.roots) {
    worst_real = std::max(worst_real, std::abs(r.value.real()));
    ok = ok && std::abs(r.value.real()) < kNumericAgreement;
  }
  return ok;
}

std::vector<std::size_t> random_v0(const OrientedGraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::size_t> v0;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    if (rng.next() & 1U) v0.push_back(x);
  }
  return v0;
}

std::string join_ids(const OrientedGraph& g, const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t x : xs) {
    if (!out.empty()) out += ",";
    out += g.vertices()[x];
  }
  return out;
}

void trial_unbranched_roots(TrialOutcome& t, const OrientedGraph& g) {
  const IntPoly p = poly_family(g, Family::kUnbranched);
  t.poly = coeff_strings(p);
  const Certificate real = certify_real_negative(p);
  const std::uint64_t d2 = deg2(g);
  const Certificate bound = certify_deg2_bound(p, d2);
  t.checks["real_negative"] = verdict(real);
  t.checks["deg2"] = d2;
  t.checks["deg2_bound"] = verdict(bound);
  expect(t, "real_negative_proven", real.proven(), "real-negative refuted: " + real.notes);
  expect(t, "deg2_bound_proven", bound.proven(), "deg2 bound refuted: " + bound.notes);
  expect(t, "evidence_rechecks", recheck(real, p).empty() && recheck(bound, p).empty(),
         "certificate evidence failed recheck");
  double worst = 0;
  const bool agree = numeric_real_negative(p, worst);
  t.checks["max_abs_imag"] = worst;
  expect(t, "numeric_agreement", agree, "numeric roots disagree with the certificate");
  t.replay =
      "zerograph poly --family unbranched witness.json > p.json && "
      "zerograph certify --property real-negative p.json && "
      "zerograph certify --property deg2 --deg2 " + std::to_string(d2) + " p.json";
}

void trial_doubled_even(TrialOutcome& t, const UndirectedGraph& g0) {
  const DoubledGraph d = doubled(g0);
  const PairingResult pairing = pairing_check(d.graph);
  expect(t, "pairing_holds", pairing.passed, "pairing hypothesis fails on the doubled graph");
  if (!pairing.passed) return;

  const IntPoly p = poly_family(d.graph, Family::kUnbranchedEven);
  t.poly = coeff_strings(p);
  const Certificate cert = certify_purely_imaginary(p);
  t.checks["purely_imaginary"] = verdict(cert);
  expect(t, "purely_imaginary_proven", cert.proven(), "purely-imaginary refuted: " + cert.notes);
  expect(t, "evidence_rechecks", recheck(cert, p).empty(), "certificate evidence failed recheck");
  double worst = 0;
  const bool agree = numeric_imaginary(p, worst);
  t.checks["max_abs_real"] = worst;
  expect(t, "numeric_agreement", agree, "numeric roots disagree with the certificate");

  const auto engine = specialize(contract_graph(d.graph, AScheme::zeta_bipartite(d.graph)));
  bool integral = true;
  IntPoly from_engine;
  try {
    from_engine = to_int_poly(engine);
  } catch (const CoefficientError&) {
    integral = false;
  }
  expect(t, "engine_integral", integral, "zeta engine left a non-integer coefficient");
  expect(t, "engine_matches_even", integral && from_engine == p,
         "zeta engine polynomial differs from the even enumeration");
  t.replay =
      "zerograph double witness.json > d.json && "
      "zerograph poly --family even d.json > p.json && "
      "zerograph certify --property imaginary p.json && "
      "zerograph engine --scheme zeta --specialize d.json";
}

void trial_v0_roots(TrialOutcome& t, const OrientedGraph& g, std::uint64_t v0_seed) {
  const auto v0 = random_v0(g, v0_seed);
  t.checks["v0"] = join_ids(g, v0);
  const FlaggedPoly fp = poly_v0(g, v0);
  t.poly = coeff_strings(fp.poly);
  t.checks["identically_zero"] = fp.identically_zero;
  if (!fp.identically_zero) {
    const Certificate cert = certify_real_negative(fp.poly, true);
    t.checks["real_nonpositive"] = verdict(cert);
    expect(t, "real_nonpositive_proven", cert.proven(), "real-nonpositive refuted: " + cert.notes);
    expect(t, "evidence_rechecks", recheck(cert, fp.poly).empty(),
           "certificate evidence failed recheck");
  }
  const MultiAffinePoly engine = contract_graph(g, AScheme::v0(g, v0));
  expect(t, "engine_terms_match", engine == multivar_P_v0(g, v0),
         "engine and V0 expansion differ term by term");
  IntPoly specialized;
  bool integral = true;
  try {
    specialized = to_int_poly(specialize(engine));
  } catch (const CoefficientError&) {
    integral = false;
  }
  expect(t, "engine_matches_v0", integral && specialized == fp.poly,
         "specialized engine polynomial differs from poly_v0");
  t.replay = "zerograph poly --family v0 --v0 '" + join_ids(g, v0) +
             "' witness.json > p.json && zerograph certify --property real-nonpositive p.json";
}

void trial_closed_form(TrialOutcome& t, const UndirectedGraph& g0) {
  const IntPoly closed = closed_form_oriented_unbranched(g0);
  const IntPoly direct = poly_family(doubled(g0).graph, Family::kUnbranched);
  t.poly = coeff_strings(direct);
  expect(t, "closed_form_matches", closed == direct,
         "closed form " + to_string(closed) + " != enumeration " + to_string(direct));
  t.replay =
      "zerograph poly --family closed31 witness.json && "
      "zerograph double witness.json > d.json && zerograph poly --family unbranched d.json";
}

void trial_closed_form_even(TrialOutcome& t, const UndirectedGraph& g0) {
  const IntPoly closed = closed_form_oriented_unbranched_even(g0, EvenFactor::kCorrected);
  const OrientedGraph d = doubled(g0).graph;
  const IntPoly direct = poly_even_components(d);
  t.poly = coeff_strings(direct);
  expect(t, "closed_form_matches", closed == direct,
         "closed form " + to_string(closed) + " != enumeration " + to_string(direct));
  if (auto b = check_bipartite(d)) {
    expect(t, "family_matches", poly_family(d, Family::kUnbranchedEven, b.partition) == direct,
           "even family under the computed bipartition differs");
  }
  t.replay =
      "zerograph poly --family closed32 witness.json && "
      "zerograph double witness.json > d.json && zerograph poly --family even d.json";
}

void trial_halfplane(TrialOutcome& t, const UndirectedGraph& g0) {
  const IntPoly p = poly_undirected_unbranched(g0);
  t.poly = coeff_strings(p);
  const HalfPlaneReport report = check_halfplane_negative(p, kNumericAgreement);
  if (p.degree() >= 1) t.checks["max_real_part"] = report.max_real_part;
  expect(t, "halfplane_negative", report.all_negative, "a numeric root has real part >= -1e-9");
  t.replay =
      "zerograph poly --family undirected witness.json > p.json && "
      "zerograph roots p.json";
}

void trial_engine(TrialOutcome& t, const OrientedGraph& g) {
  const MultiAffinePoly engine = contract_graph(g, AScheme::ones(g));
  const MultiAffinePoly direct = multivar_P(g, WeightScheme::kOnes);
  t.poly = coeff_strings(poly_family(g, Family::kUnbranched));
  t.checks["terms"] = direct.term_count();
  expect(t, "engine_terms_match", engine == direct, "engine and direct expansion differ");
  t.replay =
      "zerograph engine --scheme ones witness.json && "
      "zerograph poly --family unbranched witness.json";
}

void run_trial(const SuiteParams& params, TrialOutcome& t) {
  try {
    const AnyGraph& graph = *t.graph;
    switch (params.suite) {
      case Suite::kProp21: trial_unbranched_roots(t, std::get<OrientedGraph>(graph)); break;
      case Suite::kProp23: trial_doubled_even(t, std::get<UndirectedGraph>(graph)); break;
      case Suite::kRemark22: {
        SplitMix64 rng(params.seed ^ (0xD1B54A32D192ED03ULL * (t.index + 1)));
        trial_v0_roots(t, std::get<OrientedGraph>(graph), rng.next());
        break;
      }
      case Suite::kSec31: trial_closed_form(t, std::get<UndirectedGraph>(graph)); break;
      case Suite::kSec32: trial_closed_form_even(t, std::get<UndirectedGraph>(graph)); break;
      case Suite::kEngineEquiv: trial_engine(t, std::get<OrientedGraph>(graph)); break;
      case Suite::kHalfPlane: trial_halfplane(t, std::get<UndirectedGraph>(graph)); break;
    }
  } catch (const std::exception& e) {
    if (t.failure.empty()) t.failure = std::string("error: ") + e.what();
  }
  t.passed = t.failure.empty();
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  }
}

nlohmann::ordered_json even_factor_discrepancy() {
  const auto p3 = UndirectedGraph::from_ids({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  const IntPoly oracle = poly_even_components(doubled(p3).graph);
  const IntPoly corrected = closed_form_oriented_unbranched_even(p3, EvenFactor::kCorrected);
  const IntPoly literal = closed_form_oriented_unbranched_even(p3, EvenFactor::kLiteral);
  nlohmann::ordered_json out;
  out["graph"] = "P3 (a: 1-2, b: 2-3)";
  out["enumeration"] = to_string(oracle);
  out["factor_2_z^k"] = to_string(corrected);
  out["factor_(2z)^k"] = to_string(literal);
  out["corrected_matches"] = corrected == oracle;
  out["literal_matches"] = literal == oracle;
  out["note"] =
      "the even-component factor (2z)^k disagrees with direct enumeration on the doubled "
      "graph; 2*z^k is used";
  return out;
}

nlohmann::ordered_json closed_form_spot_checks() {
  const auto p3 = UndirectedGraph::from_ids({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  const auto edge = UndirectedGraph::from_ids({"1", "2"}, {{"a", "1", "2"}});
  nlohmann::ordered_json out;
  out["P3"] = to_string(closed_form_oriented_unbranched(p3));
  out["P3_expected"] = "1 + 4z + 4z^2";
  out["P3_ok"] = closed_form_oriented_unbranched(p3) == IntPoly{1, 4, 4} &&
                 poly_family(doubled(p3).graph, Family::kUnbranched) == IntPoly{1, 4, 4};
  out["edge"] = to_string(closed_form_oriented_unbranched(edge));
  out["edge_expected"] = "1 + 2z + z^2";
  out["edge_ok"] = closed_form_oriented_unbranched(edge) == IntPoly{1, 2, 1} &&
                   poly_family(doubled(edge).graph, Family::kUnbranched) == IntPoly{1, 2, 1};
  return out;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "prop21") return Suite::kProp21;
  if (name == "prop23") return Suite::kProp23;
  if (name == "remark22") return Suite::kRemark22;
  if (name == "sec31") return Suite::kSec31;
  if (name == "sec32") return Suite::kSec32;
  if (name == "engine-equiv") return Suite::kEngineEquiv;
  if (name == "halfplane") return Suite::kHalfPlane;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::kProp21: return "prop21";
    case Suite::kProp23: return "prop23";
    case Suite::kRemark22: return "remark22";
    case Suite::kSec31: return "sec31";
    case Suite::kSec32: return "sec32";
    case Suite::kEngineEquiv: return "engine-equiv";
    case Suite::kHalfPlane: return "halfplane";
  }
  return "?";
}

SuiteParams default_params(Suite s) {
  switch (s) {
    case Suite::kProp21: return {s, 500, 12, 7, 1};
    case Suite::kProp23: return {s, 200, 7, 8, 1};
    case Suite::kRemark22: return {s, 200, 10, 7, 1};
    case Suite::kSec31: return {s, 200, 8, 7, 1};
    case Suite::kSec32: return {s, 200, 8, 7, 1};
    case Suite::kEngineEquiv: return {s, 300, 8, 6, 1};
    case Suite::kHalfPlane: return {s, 200, 10, 8, 1};
  }
  return {};
}

RandomKind suite_kind(Suite s) {
  switch (s) {
    case Suite::kProp21:
    case Suite::kRemark22:
    case Suite::kEngineEquiv: return RandomKind::kOriented;
    case Suite::kProp23: return RandomKind::kBipartiteUndirected;
    case Suite::kSec31:
    case Suite::kSec32:
    case Suite::kHalfPlane: return RandomKind::kSimpleUndirected;
  }
  return RandomKind::kOriented;
}

AnyGraph trial_graph(const SuiteParams& params, std::size_t index) {
  if (params.max_vertices < 2) throw std::invalid_argument("max_vertices must be at least 2");
  SplitMix64 rng(params.seed + 0x9E3779B97F4A7C15ULL * (index + 1));
  const std::size_t n = 2 + static_cast<std::size_t>(rng.below(params.max_vertices - 1));
  const RandomKind kind = suite_kind(params.suite);
  std::size_t feasible = params.max_edges;
  if (kind == RandomKind::kSimpleUndirected) feasible = std::min(feasible, n * (n - 1) / 2);
  if (kind == RandomKind::kBipartiteUndirected) {
    feasible = std::min(feasible, (n / 2) * (n - n / 2));
  }
  const std::size_t m = static_cast<std::size_t>(rng.below(feasible + 1));
  return random_graph(kind, n, m, rng.next());
}

std::vector<OrientedGraph> all_small_oriented(std::size_t max_vertices, std::size_t max_arcs) {
  std::vector<OrientedGraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::string> ids;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u != v) pairs.emplace_back(u, v);
      }
    }
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      std::vector<Arc> arcs;
      for (std::size_t k = 0; k < pick.size(); ++k) {
        arcs.push_back(Arc{"e" + std::to_string(k + 1), pairs[pick[k]].first,
                           pairs[pick[k]].second});
      }
      out.emplace_back(ids, std::move(arcs));
      if (pick.size() == max_arcs) return;
      for (std::size_t j = from; j < pairs.size(); ++j) {
        pick.push_back(j);
        extend(j);
        pick.pop_back();
      }
    };
    extend(0);
  }
  return out;
}

std::size_t VerifyReport::failed() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(), [](const TrialOutcome& t) { return !t.passed; }));
}

unsigned worker_count() {
  if (const char* env = std::getenv("ZEROGRAPH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

VerifyReport run_suite(const SuiteParams& params, unsigned threads) {
  const auto started = std::chrono::steady_clock::now();
  VerifyReport report;
  report.params = params;

  std::vector<TrialOutcome> trials(params.trials);
  for (std::size_t i = 0; i < params.trials; ++i) {
    trials[i].index = i;
    trials[i].source = "random";
    trials[i].graph = trial_graph(params, i);
  }
  if (params.suite == Suite::kEngineEquiv) {
    for (auto& g : all_small_oriented(3, 4)) {
      TrialOutcome t;
      t.index = trials.size();
      t.source = "exhaustive";
      t.graph = std::move(g);
      trials.push_back(std::move(t));
    }
  }

  parallel_for(trials.size(), threads, [&](std::size_t i) { run_trial(params, trials[i]); });
  report.trials = std::move(trials);

  if (params.suite == Suite::kSec31) report.extras["spot_checks"] = closed_form_spot_checks();
  if (params.suite == Suite::kSec32) report.extras["documented_discrepancy"] = even_factor_discrepancy();

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json out;
  out["suite"] = std::string(zerograph::to_string(params.suite));
  out["params"] = {{"kind", std::string(zerograph::to_string(suite_kind(params.suite)))},
                   {"trials", params.trials},
                   {"max_edges", params.max_edges},
                   {"max_vertices", params.max_vertices},
                   {"seed", params.seed}};
  out["summary"] = {{"trials", trials.size()},
                    {"passed", trials.size() - failed()},
                    {"failed", failed()}};
  if (!extras.empty()) out["extras"] = extras;

  auto rows = nlohmann::ordered_json::array();
  auto failures = nlohmann::ordered_json::array();
  for (const auto& t : trials) {
    nlohmann::ordered_json row;
    row["index"] = t.index;
    row["source"] = t.source;
    row["digest"] = graph_digest(*t.graph);
    row["poly"] = t.poly;
    row["checks"] = t.checks;
    row["passed"] = t.passed;
    rows.push_back(std::move(row));
    if (!t.passed) {
      failures.push_back({{"index", t.index},
                          {"reason", t.failure},
                          {"graph", zerograph::to_json(*t.graph)},
                          {"replay", t.replay}});
    }
  }
  out["trials"] = std::move(rows);
  out["failures"] = std::move(failures);
  return out;
}

}  // namespace zerograph
