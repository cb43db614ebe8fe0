#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mwkit/graph.hpp"

namespace mwkit::detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json graph_to_json(const Graph& g) {
  ordered_json j;
  j["vertices"] = g.names();
  auto edges = ordered_json::array();
  for (auto [a, b] : g.edges())
    edges.push_back(ordered_json::array({g.name(a), g.name(b)}));
  j["edges"] = edges;
  return j;
}

// Accepts either the inline {vertices, edges} object or an edge-list text
// blob as a JSON string.
inline Graph graph_from_json(const ordered_json& j, const std::string& what) {
  if (j.is_string()) return parse_graph(j.get<std::string>());
  if (!j.is_object())
    throw ParseError(what + " must be an object or an edge-list string");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("vertices"))
    for (const auto& v : j.at("vertices")) names.push_back(v.get<std::string>());
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError(what + ": each edge must be a two-element array");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  try {
    return Graph::from_named_edges(names, edges);
  } catch (const Error& err) {
    throw ParseError(what + ": " + err.what());
  }
}

inline ordered_json parse_json_document(const std::string& text,
                                        const std::string& expected_format) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format") ||
      j.at("format") != expected_format)
    throw ParseError("expected a document with format=\"" + expected_format + "\"");
  return j;
}

inline std::string dump_document(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace mwkit::detail
