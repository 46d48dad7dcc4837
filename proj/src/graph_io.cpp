#include "rigidbar/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "rigidbar/error.hpp"

namespace rigidbar {

namespace {

Vertex as_vertex(const nlohmann::json& value, const char* where) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw InputError(std::string("expected a nonnegative integer vertex id in ") + where);
    }
    return value.get<Vertex>();
}

}  // namespace

LoopedGraph graph_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw InputError("graph document must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "vertices" && key != "edges" && key != "loops") {
            throw InputError("unexpected key \"" + key + "\" in graph document");
        }
    }
    if (!doc.contains("vertices")) throw InputError("graph document is missing \"vertices\"");
    const Vertex n = as_vertex(doc["vertices"], "\"vertices\"");

    std::vector<LoopedGraph::Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2) {
                throw InputError("each edge must be a two-element array");
            }
            edges.emplace_back(as_vertex(e[0], "\"edges\""), as_vertex(e[1], "\"edges\""));
        }
    }
    std::vector<Vertex> loops;
    if (doc.contains("loops")) {
        if (!doc["loops"].is_array()) throw InputError("\"loops\" must be an array");
        for (const auto& v : doc["loops"]) loops.push_back(as_vertex(v, "\"loops\""));
    }
    return LoopedGraph(n, std::move(edges), std::move(loops));
}

nlohmann::json graph_to_json(const LoopedGraph& g) {
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}, {"loops", g.loops()}};
}

std::string dump_graph(const LoopedGraph& g) {
    // nlohmann::json sorts keys alphabetically; keep the documented order.
    nlohmann::ordered_json doc;
    doc["vertices"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    doc["loops"] = g.loops();
    return doc.dump();
}

LoopedGraph parse_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(doc);
}

LoopedGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

void save_graph(const LoopedGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write graph file " + path.string());
    out << dump_graph(g) << '\n';
}

}  // namespace rigidbar
