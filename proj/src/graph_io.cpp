#include "zerograph/graph_io.hpp"

#include <cstdint>
#include <cstdio>
#include <set>

namespace zerograph {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const char* where) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw GraphError(std::string("unknown key '") + item.key() + "' in " + where);
    }
  }
}

const json& require(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw GraphError(std::string("missing key '") + key + "' in " + where);
  }
  return *it;
}

std::string as_string(const json& v, const char* what) {
  if (!v.is_string()) throw GraphError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> as_string_list(const json& v, const char* what) {
  if (!v.is_array()) throw GraphError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(as_string(x, what));
  return out;
}

template <typename Json>
Json bipartition_json(const std::vector<std::string>& names, const Bipartition& b) {
  Json out = Json::object();
  Json v1 = Json::array(), v2 = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i) {
    (b.side[i] == Side::kV1 ? v1 : v2).push_back(names[i]);
  }
  out["V1"] = std::move(v1);
  out["V2"] = std::move(v2);
  return out;
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("malformed JSON: ") + e.what());
  }
  return parse_graph_json(doc);
}

AnyGraph parse_graph_json(const json& doc) {
  if (!doc.is_object()) throw GraphError("graph document must be a JSON object");
  reject_unknown_keys(doc, {"directed", "vertices", "edges", "bipartition"}, "graph");

  const json& directed = require(doc, "directed", "graph");
  if (!directed.is_boolean()) throw GraphError("'directed' must be a boolean");
  auto vertices = as_string_list(require(doc, "vertices", "graph"), "vertex id");
  const json& edges = require(doc, "edges", "graph");
  if (!edges.is_array()) throw GraphError("'edges' must be an array");

  std::optional<IdBipartition> bipartition;
  if (auto it = doc.find("bipartition"); it != doc.end()) {
    if (!it->is_object()) throw GraphError("'bipartition' must be an object");
    reject_unknown_keys(*it, {"V1", "V2"}, "bipartition");
    bipartition = IdBipartition{as_string_list(require(*it, "V1", "bipartition"), "V1 entry"),
                                as_string_list(require(*it, "V2", "bipartition"), "V2 entry")};
  }

  if (directed.get<bool>()) {
    std::vector<ArcSpec> arcs;
    for (const auto& e : edges) {
      if (!e.is_object()) throw GraphError("edge entries must be objects");
      reject_unknown_keys(e, {"id", "tail", "head"}, "directed edge");
      arcs.push_back(ArcSpec{as_string(require(e, "id", "edge"), "edge id"),
                             as_string(require(e, "tail", "edge"), "tail"),
                             as_string(require(e, "head", "edge"), "head")});
    }
    return OrientedGraph::from_ids(std::move(vertices), arcs, bipartition);
  }

  std::vector<EdgeSpec> list;
  for (const auto& e : edges) {
    if (!e.is_object()) throw GraphError("edge entries must be objects");
    reject_unknown_keys(e, {"id", "ends"}, "undirected edge");
    auto ends = as_string_list(require(e, "ends", "edge"), "edge end");
    if (ends.size() != 2) throw GraphError("'ends' must list exactly two vertices");
    list.push_back(EdgeSpec{as_string(require(e, "id", "edge"), "edge id"), ends[0], ends[1]});
  }
  return UndirectedGraph::from_ids(std::move(vertices), list, bipartition);
}

nlohmann::ordered_json to_json(const OrientedGraph& g) {
  nlohmann::ordered_json out;
  out["directed"] = true;
  out["vertices"] = g.vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& a : g.arcs()) {
    edges.push_back({{"id", a.id}, {"tail", g.vertices()[a.tail]}, {"head", g.vertices()[a.head]}});
  }
  out["edges"] = std::move(edges);
  if (g.bipartition()) {
    out["bipartition"] = bipartition_json<nlohmann::ordered_json>(g.vertices(), *g.bipartition());
  }
  return out;
}

nlohmann::ordered_json to_json(const UndirectedGraph& g) {
  nlohmann::ordered_json out;
  out["directed"] = false;
  out["vertices"] = g.vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(
        {{"id", e.id}, {"ends", {g.vertices()[e.u], g.vertices()[e.v]}}});
  }
  out["edges"] = std::move(edges);
  if (g.bipartition()) {
    out["bipartition"] = bipartition_json<nlohmann::ordered_json>(g.vertices(), *g.bipartition());
  }
  return out;
}

nlohmann::ordered_json to_json(const AnyGraph& g) {
  return std::visit([](const auto& x) { return to_json(x); }, g);
}

std::string serialize(const AnyGraph& g) { return to_json(g).dump(2); }

std::string graph_digest(const AnyGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json(g).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace zerograph
