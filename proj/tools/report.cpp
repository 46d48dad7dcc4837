#include "report.hpp"

#include <cstdio>

#include "rigidbar/graph_io.hpp"

namespace rigidbar::cli {

std::string input_digest(const LoopedGraph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : dump_graph(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

Json to_json(const LoopedGraph& g) { return Json::parse(dump_graph(g)); }

Json to_json(const LoopedGraph& g, ElementId e) {
    if (e.is_loop()) return Json{{"loop", e.index}, {"vertex", g.loop_vertex(e.index)}};
    const auto [u, v] = g.edge(e.index);
    return Json{{"edge", e.index}, {"ends", {u, v}}};
}

Json to_json(const RankReport& r) {
    return Json{{"rank", r.rank},
                {"rows", r.rows},
                {"cols", r.cols},
                {"trials", r.trials},
                {"error_bound", r.failure_bound}};
}

Json to_json(const LoopedGraph& g, const CharacterisationWitness& w) {
    struct Visitor {
        const LoopedGraph& g;
        Json operator()(std::monostate) const { return nullptr; }
        Json operator()(const SparsityViolation& s) const {
            return Json{{"kind", "sparsity_violation"}, {"vertices", s.vertices}};
        }
        Json operator()(const CliqueFound& c) const { return Json{{"kind", "clique"}, {"vertices", c.vertices}}; }
        Json operator()(const TightSubgraph& t) const {
            Json elements = Json::array();
            for (ElementId e : t.elements) elements.push_back(to_json(g, e));
            return Json{{"kind", "tight_subgraph"}, {"elements", std::move(elements)}};
        }
    };
    return std::visit(Visitor{g}, w);
}

Json randomized(bool verdict, double error_bound) {
    return Json{{"value", verdict}, {"error_bound", error_bound}};
}

}  // namespace rigidbar::cli
