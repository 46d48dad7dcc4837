#include "rigidbar/generators.hpp"

#include <algorithm>

#include "rigidbar/characterisation.hpp"
#include "rigidbar/error.hpp"

namespace rigidbar {

VertexSubset random_subset(RandomSource& rs, std::vector<Vertex> pool, std::size_t k) {
    if (k > pool.size()) throw InputError("random_subset: not enough vertices");
    for (std::size_t i = 0; i < k; ++i) {
        std::swap(pool[i], pool[i + rs.below(pool.size() - i)]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

LoopedGraph random_looped_graph(RandomSource& rs, std::size_t vertices, std::uint64_t edge_ppm,
                                std::size_t min_loops, std::size_t max_loops) {
    if (min_loops > max_loops) throw InputError("min_loops exceeds max_loops");
    std::vector<LoopedGraph::Edge> edges;
    for (Vertex u = 0; u < vertices; ++u) {
        for (Vertex v = u + 1; v < vertices; ++v) {
            if (rs.bernoulli(edge_ppm, kPpm)) edges.emplace_back(u, v);
        }
    }
    std::vector<Vertex> loops;
    for (Vertex v = 0; v < vertices; ++v) {
        const auto count = static_cast<std::size_t>(rs.uniform_int(static_cast<std::int64_t>(min_loops),
                                                                   static_cast<std::int64_t>(max_loops)));
        loops.insert(loops.end(), count, v);
    }
    return LoopedGraph(vertices, std::move(edges), std::move(loops));
}

LoopedGraph random_element_graph(RandomSource& rs, std::size_t vertices, std::size_t elements) {
    if (vertices == 0 && elements > 0) throw InputError("cannot place elements on zero vertices");
    std::vector<LoopedGraph::Edge> free_pairs;
    for (Vertex u = 0; u < vertices; ++u) {
        for (Vertex v = u + 1; v < vertices; ++v) free_pairs.emplace_back(u, v);
    }
    std::vector<LoopedGraph::Edge> edges;
    std::vector<Vertex> loops;
    for (std::size_t i = 0; i < elements; ++i) {
        if (!free_pairs.empty() && rs.bernoulli(1, 2)) {
            const auto j = rs.below(free_pairs.size());
            edges.push_back(free_pairs[j]);
            free_pairs.erase(free_pairs.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
            loops.push_back(rs.below(vertices));
        }
    }
    return LoopedGraph(vertices, std::move(edges), std::move(loops));
}

namespace {

std::vector<Vertex> all_vertices(const LoopedGraph& g) {
    std::vector<Vertex> out(g.vertex_count());
    for (Vertex v = 0; v < out.size(); ++v) out[v] = v;
    return out;
}

}  // namespace

std::optional<LoopedGraph> random_zero_extension(const LoopedGraph& g, std::size_t d, RandomSource& rs) {
    if (g.vertex_count() < d) return std::nullopt;
    return zero_extension(g, random_subset(rs, all_vertices(g), d), d);
}

std::optional<LoopedGraph> random_one_extension(const LoopedGraph& g, std::size_t d, RandomSource& rs) {
    if (g.edge_count() == 0 || g.vertex_count() < d + 1) return std::nullopt;
    const auto e = rs.below(g.edge_count());
    const auto [x, y] = g.edge(e);
    auto pool = all_vertices(g);
    std::erase_if(pool, [x, y](Vertex v) { return v == x || v == y; });
    return one_extension(g, ElementId::edge(e), random_subset(rs, std::move(pool), d - 1), d);
}

LoopedGraph zero_extension_chain(RandomSource& rs, std::size_t vertices, std::size_t d) {
    if (vertices == 0) throw InputError("a generated graph needs at least one vertex");
    if (d == 0) throw InputError("dimension must be at least 1");
    LoopedGraph g(1, {}, std::vector<Vertex>(d, 0));
    while (g.vertex_count() < vertices) {
        if (auto next = random_zero_extension(g, d, rs)) {
            g = std::move(*next);
            continue;
        }
        const Vertex fresh = g.vertex_count();
        auto edges = g.edges();
        auto loops = g.loops();
        for (Vertex v = 0; v < fresh; ++v) edges.emplace_back(v, fresh);
        loops.insert(loops.end(), d - fresh, fresh);
        g = LoopedGraph(fresh + 1, std::move(edges), std::move(loops));
    }
    return g;
}

LoopedGraph one_extension_chain(RandomSource& rs, std::size_t vertices, std::size_t d) {
    if (vertices == 0) throw InputError("a generated graph needs at least one vertex");
    LoopedGraph g = zero_extension_chain(rs, std::min(vertices, d + 1), d);
    while (g.vertex_count() < vertices) g = *random_one_extension(g, d, rs);
    return g;
}

}  // namespace rigidbar
