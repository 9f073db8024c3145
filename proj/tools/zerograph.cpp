// zerograph: graph-counting polynomials of oriented graphs, their
// contraction-engine construction, and exact zero-location certificates.
//
// Exit status: 0 all checks pass, 1 a property was refuted (the witness is
// in the output), 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zerograph/asano.hpp"
#include "zerograph/certify.hpp"
#include "zerograph/graph_io.hpp"
#include "zerograph/numeric_roots.hpp"
#include "zerograph/poly_io.hpp"
#include "zerograph/random_graph.hpp"
#include "zerograph/subgraph.hpp"
#include "zerograph/verify.hpp"

namespace {

using namespace zerograph;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const nlohmann::ordered_json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::size_t> vertex_indices(const OrientedGraph& g, const std::string& list) {
  std::vector<std::size_t> out;
  for (const auto& id : split_ids(list)) {
    auto x = g.find_vertex(id);
    if (!x) throw UsageError("unknown vertex '" + id + "'");
    out.push_back(*x);
  }
  return out;
}

const OrientedGraph& need_directed(const AnyGraph& g, const char* what) {
  if (!std::holds_alternative<OrientedGraph>(g)) {
    throw UsageError(std::string(what) + " needs a directed graph (use 'double' first)");
  }
  return std::get<OrientedGraph>(g);
}

const UndirectedGraph& need_undirected(const AnyGraph& g, const char* what) {
  if (!std::holds_alternative<UndirectedGraph>(g)) {
    throw UsageError(std::string(what) + " needs an undirected graph");
  }
  return std::get<UndirectedGraph>(g);
}

Bipartition need_bipartition(const OrientedGraph& g) {
  auto check = check_bipartite(g);
  if (!check) throw UsageError("graph is not bipartite");
  return *check.partition;
}

struct Options {
  std::string input = "-";
  std::string out;
  std::string family = "unbranched";
  std::string scheme = "ones";
  std::string v0;
  std::string tilde;
  std::string property = "real-negative";
  std::string suite = "prop21";
  std::string kind = "oriented";
  bool literal = false;
  bool specialize = false;
  std::uint64_t d2 = 0;
  bool d2_given = false;
  double tol = 1e-12;
  std::size_t n = 1;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  std::size_t max_edges = 0;
  std::size_t max_vertices = 0;
};

int cmd_validate(const Options& o) {
  const AnyGraph g = parse_graph(read_input(o.input));
  nlohmann::ordered_json out;
  out["valid"] = true;
  std::visit(
      [&](const auto& graph) {
        using T = std::decay_t<decltype(graph)>;
        out["directed"] = std::is_same_v<T, OrientedGraph>;
        out["vertices"] = graph.vertex_count();
        if constexpr (std::is_same_v<T, OrientedGraph>) {
          out["arcs"] = graph.arc_count();
          out["deg2"] = deg2(graph);
        } else {
          out["edges"] = graph.edge_count();
          out["simple"] = graph.is_simple();
        }
        auto check = check_bipartite(graph);
        out["bipartite"] = static_cast<bool>(check);
        if (!check && !check.odd_cycle.empty()) {
          auto cycle = nlohmann::ordered_json::array();
          for (std::size_t x : check.odd_cycle) cycle.push_back(graph.vertices()[x]);
          out["odd_cycle"] = std::move(cycle);
        }
      },
      g);
  write_output(out, o.out);
  return kOk;
}

int cmd_double(const Options& o) {
  const AnyGraph g = parse_graph(read_input(o.input));
  write_output(to_json(doubled(need_undirected(g, "double")).graph), o.out);
  return kOk;
}

int cmd_poly(const Options& o) {
  const AnyGraph g = parse_graph(read_input(o.input));
  IntPoly p;
  if (o.family == "unbranched") {
    p = poly_family(need_directed(g, "unbranched"), Family::kUnbranched);
  } else if (o.family == "loop") {
    p = poly_family(need_directed(g, "loop"), Family::kLoop);
  } else if (o.family == "even") {
    const auto& og = need_directed(g, "even");
    p = poly_family(og, Family::kUnbranchedEven, need_bipartition(og));
  } else if (o.family == "v0") {
    const auto& og = need_directed(g, "v0");
    p = poly_v0(og, vertex_indices(og, o.v0)).poly;
  } else if (o.family == "undirected") {
    p = poly_undirected_unbranched(need_undirected(g, "undirected"));
  } else if (o.family == "closed31") {
    p = closed_form_oriented_unbranched(need_undirected(g, "closed31"));
  } else if (o.family == "closed32") {
    p = closed_form_oriented_unbranched_even(need_undirected(g, "closed32"),
                                             o.literal ? EvenFactor::kLiteral
                                                       : EvenFactor::kCorrected);
  } else {
    throw UsageError("unknown family '" + o.family + "'");
  }
  write_output(to_json(p), o.out);
  return kOk;
}

int cmd_engine(const Options& o) {
  const AnyGraph any = parse_graph(read_input(o.input));
  const auto& g = need_directed(any, "engine");
  AScheme scheme;
  if (o.scheme == "ones") {
    scheme = AScheme::ones(g);
  } else if (o.scheme == "zeta") {
    scheme = AScheme::zeta_bipartite(g, need_bipartition(g));
  } else if (o.scheme == "v0") {
    scheme = AScheme::v0(g, vertex_indices(g, o.v0));
  } else {
    throw UsageError("unknown scheme '" + o.scheme + "'");
  }
  scheme.set_tilde(vertex_indices(g, o.tilde));
  const MultiAffinePoly p = contract_graph(g, scheme);
  if (!o.specialize) {
    write_output(to_json(p), o.out);
    return kOk;
  }
  const auto coeffs = specialize(p);
  try {
    write_output(to_json(to_int_poly(coeffs)), o.out);
  } catch (const CoefficientError&) {
    nlohmann::ordered_json out;
    auto list = nlohmann::ordered_json::array();
    for (const auto& c : coeffs) list.push_back(to_json(c));
    out["cyc8_coeffs"] = std::move(list);
    write_output(out, o.out);
  }
  return kOk;
}

int cmd_certify(const Options& o) {
  const IntPoly p = parse_int_poly(read_input(o.input));
  if (p.is_zero()) throw UsageError("polynomial vanishes identically; nothing to certify");
  Certificate cert;
  switch (parse_property(o.property)) {
    case Property::kRealNegative: cert = certify_real_negative(p, false); break;
    case Property::kRealNonpositive: cert = certify_real_negative(p, true); break;
    case Property::kPurelyImaginary: cert = certify_purely_imaginary(p); break;
    case Property::kDeg2Bound:
      if (!o.d2_given) throw UsageError("--deg2 is required for the deg2 property");
      cert = certify_deg2_bound(p, o.d2);
      break;
  }
  write_output(to_json(cert), o.out);
  return cert.proven() ? kOk : kRefuted;
}

int cmd_roots(const Options& o) {
  const IntPoly p = parse_int_poly(read_input(o.input));
  if (p.degree() < 1) throw UsageError("roots needs a polynomial of degree at least 1");
  const NumericRoots r = numeric_roots(p, o.tol);
  write_output(to_json(r), o.out);
  return r.converged ? kOk : kRefuted;
}

int cmd_random(const Options& o) {
  write_output(to_json(random_graph(parse_random_kind(o.kind), o.n, o.m, o.seed)), o.out);
  return kOk;
}

int cmd_verify(const Options& o) {
  SuiteParams params = default_params(parse_suite(o.suite));
  params.seed = o.seed;
  if (o.trials) params.trials = o.trials;
  if (o.max_edges) params.max_edges = o.max_edges;
  if (o.max_vertices) params.max_vertices = o.max_vertices;
  const VerifyReport report = run_suite(params);
  write_output(report.to_json(), o.out);
  std::fprintf(stderr, "%s: %zu/%zu trials passed in %.2f s\n", o.suite.c_str(),
               report.trials.size() - report.failed(), report.trials.size(),
               report.wall_seconds);
  return report.passed() ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-counting polynomials of oriented graphs and exact zero-location checks"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "input JSON file, '-' for stdin");
    sub->add_option("--out", o.out, "write the JSON result here instead of stdout");
  };

  auto* validate = app.add_subcommand("validate", "check a graph document");
  add_io(validate);
  auto* dbl = app.add_subcommand("double", "replace each undirected edge by two opposite arcs");
  add_io(dbl);

  auto* poly = app.add_subcommand("poly", "build a counting polynomial by enumeration");
  add_io(poly);
  poly->add_option("--family", o.family,
                   "unbranched | loop | even | v0 | undirected | closed31 | closed32");
  poly->add_option("--v0", o.v0, "comma-separated vertex ids (family v0)");
  poly->add_flag("--literal-factor", o.literal, "closed32 with the (2z)^k factor");

  auto* engine = app.add_subcommand("engine", "contract the vertex-factor product");
  add_io(engine);
  engine->add_option("--scheme", o.scheme, "ones | zeta | v0");
  engine->add_option("--v0", o.v0, "comma-separated vertex ids (scheme v0)");
  engine->add_option("--tilde", o.tilde, "comma-separated vertices using 1 + p_x");
  engine->add_flag("--specialize", o.specialize, "set every arc variable equal to z");

  auto* certify = app.add_subcommand("certify", "exact zero-location certificate");
  add_io(certify);
  certify->add_option("--property", o.property,
                      "real-negative | real-nonpositive | imaginary | deg2");
  certify->add_option("--deg2", o.d2, "deg2 of the source graph")->each([&](const std::string&) {
    o.d2_given = true;
  });

  auto* roots = app.add_subcommand("roots", "numeric roots (Aberth-Ehrlich)");
  add_io(roots);
  roots->add_option("--tol", o.tol, "stop when the largest correction is below this");

  auto* random = app.add_subcommand("random", "seeded random graph");
  random->add_option("--kind", o.kind, "oriented | bipartite-undirected | simple-undirected");
  random->add_option("-n", o.n, "vertex count");
  random->add_option("-m", o.m, "edge count");
  random->add_option("--seed", o.seed, "64-bit seed");
  random->add_option("--out", o.out, "output file");

  auto* verify = app.add_subcommand("verify", "run a seeded verification suite");
  verify->add_option("--suite", o.suite,
                     "prop21 | prop23 | remark22 | sec31 | sec32 | engine-equiv | halfplane");
  verify->add_option("--trials", o.trials, "number of random trials");
  verify->add_option("--max-edges", o.max_edges, "edge cap per trial graph");
  verify->add_option("--max-vertices", o.max_vertices, "vertex cap per trial graph");
  verify->add_option("--seed", o.seed, "64-bit seed");
  verify->add_option("--out", o.out, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*dbl) return cmd_double(o);
    if (*poly) return cmd_poly(o);
    if (*engine) return cmd_engine(o);
    if (*certify) return cmd_certify(o);
    if (*roots) return cmd_roots(o);
    if (*random) return cmd_random(o);
    if (*verify) return cmd_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "zerograph: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
