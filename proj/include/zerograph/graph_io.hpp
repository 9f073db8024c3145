#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "zerograph/graph.hpp"

namespace zerograph {

using AnyGraph = std::variant<OrientedGraph, UndirectedGraph>;

/// Parses a graph document:
///   {"directed": bool, "vertices": [id...],
///    "edges": [{"id", "tail", "head"}] | [{"id", "ends": [u, v]}],
///    "bipartition": {"V1": [...], "V2": [...]}}   (optional)
/// Unknown keys are rejected. Throws GraphError.
AnyGraph parse_graph(std::string_view text);
AnyGraph parse_graph_json(const nlohmann::json& doc);

nlohmann::ordered_json to_json(const OrientedGraph& g);
nlohmann::ordered_json to_json(const UndirectedGraph& g);
nlohmann::ordered_json to_json(const AnyGraph& g);

/// Pretty-printed document; parse_graph(serialize(g)) == g.
std::string serialize(const AnyGraph& g);

/// 64-bit FNV-1a of the compact document, as 16 hex digits.
std::string graph_digest(const AnyGraph& g);

}  // namespace zerograph
