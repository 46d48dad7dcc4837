#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rigidbar/graph.hpp"

namespace rigidbar {

// Graph documents look like
//
//   {"vertices": 3, "edges": [[0,1],[1,2],[0,2]], "loops": [0,0,2]}
//
// with one "loops" entry per loop, naming its vertex. Loop ids are list
// positions. Edges keep the endpoint order they were written with, so
// dump_graph(parse_graph(text)) == text whenever text is in canonical form.

LoopedGraph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const LoopedGraph& g);

/// Compact canonical text: key order vertices, edges, loops; no whitespace.
std::string dump_graph(const LoopedGraph& g);
LoopedGraph parse_graph(std::string_view text);

LoopedGraph load_graph(const std::filesystem::path& path);
void save_graph(const LoopedGraph& g, const std::filesystem::path& path);

}  // namespace rigidbar
