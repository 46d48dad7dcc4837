#include "rigidbar/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rigidbar/error.hpp"

namespace rigidbar {

namespace {

LoopedGraph::Edge ordered(LoopedGraph::Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

}  // namespace

LoopedGraph::LoopedGraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Vertex> loops)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      loops_(std::move(loops)),
      adjacency_(vertex_count),
      loops_at_(vertex_count, 0) {
    std::set<Edge> seen;
    for (const auto& [u, v] : edges_) {
        if (u >= vertex_count_ || v >= vertex_count_) {
            throw InputError("edge [" + std::to_string(u) + "," + std::to_string(v) +
                             "] references an unknown vertex");
        }
        if (u == v) {
            throw InputError("edge [" + std::to_string(u) + "," + std::to_string(v) +
                             "] joins a vertex to itself; use a loop");
        }
        if (!seen.insert(ordered({u, v})).second) {
            throw InputError("parallel edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (Vertex v : loops_) {
        if (v >= vertex_count_) {
            throw InputError("loop at unknown vertex " + std::to_string(v));
        }
        ++loops_at_[v];
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool LoopedGraph::contains(ElementId e) const {
    return e.is_loop() ? e.index < loops_.size() : e.index < edges_.size();
}

LoopedGraph::Edge LoopedGraph::endpoints(ElementId e) const {
    if (!contains(e)) throw InputError("element not in graph");
    if (e.is_loop()) return {loops_[e.index], loops_[e.index]};
    return edges_[e.index];
}

bool LoopedGraph::has_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count_ || v >= vertex_count_) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<std::size_t> LoopedGraph::edge_index(Vertex u, Vertex v) const {
    const Edge key = ordered({u, v});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (ordered(edges_[i]) == key) return i;
    }
    return std::nullopt;
}

std::vector<ElementId> LoopedGraph::elements() const {
    std::vector<ElementId> out;
    out.reserve(element_count());
    for (std::size_t i = 0; i < edges_.size(); ++i) out.push_back(ElementId::edge(i));
    for (std::size_t i = 0; i < loops_.size(); ++i) out.push_back(ElementId::loop(i));
    return out;
}

LoopedGraph LoopedGraph::spanning_subgraph(std::span<const ElementId> keep) const {
    std::vector<char> keep_edge(edges_.size(), 0);
    std::vector<char> keep_loop(loops_.size(), 0);
    for (ElementId e : keep) {
        if (!contains(e)) throw InputError("element not in graph");
        (e.is_loop() ? keep_loop : keep_edge)[e.index] = 1;
    }
    std::vector<Edge> edges;
    std::vector<Vertex> loops;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (keep_edge[i]) edges.push_back(edges_[i]);
    }
    for (std::size_t i = 0; i < loops_.size(); ++i) {
        if (keep_loop[i]) loops.push_back(loops_[i]);
    }
    return LoopedGraph(vertex_count_, std::move(edges), std::move(loops));
}

LoopedGraph LoopedGraph::without(ElementId e) const {
    if (!contains(e)) throw InputError("element not in graph");
    auto keep = elements();
    std::erase(keep, e);
    return spanning_subgraph(keep);
}

bool LoopedGraph::operator==(const LoopedGraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_ && loops_ == other.loops_;
}

void validate_subset(const LoopedGraph& g, std::span<const Vertex> x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] >= g.vertex_count()) {
            throw InputError("unknown vertex id " + std::to_string(x[i]));
        }
        if (i > 0 && x[i - 1] >= x[i]) {
            throw InputError("vertex subset must be sorted and duplicate-free");
        }
    }
}

VertexSubset make_subset(const LoopedGraph& g, std::vector<Vertex> ids) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
        throw InputError("duplicate vertex in subset");
    }
    validate_subset(g, ids);
    return ids;
}

std::size_t induced_count(const LoopedGraph& g, std::span<const Vertex> x) {
    validate_subset(g, x);
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : x) in[v] = 1;
    std::size_t count = 0;
    for (const auto& [u, v] : g.edges()) {
        if (in[u] && in[v]) ++count;
    }
    for (Vertex v : x) count += g.loops_at(v);
    return count;
}

LoopedGraph add_uniform_loops(const LoopedGraph& g, std::size_t k) {
    std::vector<Vertex> loops = g.loops();
    loops.reserve(loops.size() + k * g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        loops.insert(loops.end(), k, v);
    }
    return LoopedGraph(g.vertex_count(), g.edges(), std::move(loops));
}

std::optional<VertexSubset> contains_clique(const LoopedGraph& g, std::size_t k) {
    if (k == 0) throw InputError("clique size must be positive");
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) + 1 >= k) candidates.push_back(v);
    }
    std::vector<Vertex> clique;
    auto adjacent = [&g](Vertex a, Vertex b) { return g.has_edge(a, b); };
    if (detail::extend_clique(clique, candidates, k, adjacent)) return clique;
    return std::nullopt;
}

std::optional<VertexSubset> clique_through_pair(const LoopedGraph& g, Vertex u, Vertex v,
                                                std::size_t k) {
    if (k < 2) throw InputError("a clique through a pair needs k >= 2");
    if (u == v || u >= g.vertex_count() || v >= g.vertex_count()) {
        throw InputError("clique_through_pair needs two distinct vertices of the graph");
    }
    std::vector<Vertex> common;
    std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                          g.neighbors(v).end(), std::back_inserter(common));
    std::erase_if(common, [&](Vertex w) { return g.degree(w) + 1 < k; });
    std::vector<Vertex> clique;
    auto adjacent = [&g](Vertex a, Vertex b) { return g.has_edge(a, b); };
    if (!detail::extend_clique(clique, common, k - 2, adjacent)) return std::nullopt;
    clique.push_back(u);
    clique.push_back(v);
    std::sort(clique.begin(), clique.end());
    return clique;
}

std::size_t min_loop_degree(const LoopedGraph& g) {
    if (g.vertex_count() == 0) throw InputError("min_loop_degree of the empty graph");
    std::size_t best = g.loops_at(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.loops_at(v));
    return best;
}

std::vector<VertexSubset> component_vertex_sets(const LoopedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> label(n, n);
    std::vector<VertexSubset> out;
    for (Vertex root = 0; root < n; ++root) {
        if (label[root] != n) continue;
        const std::size_t id = out.size();
        VertexSubset members;
        std::vector<Vertex> stack{root};
        label[root] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (label[w] == n) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<LoopedGraph> connected_components(const LoopedGraph& g) {
    const auto sets = component_vertex_sets(g);
    std::vector<std::size_t> component(g.vertex_count());
    std::vector<std::size_t> local(g.vertex_count());
    for (std::size_t c = 0; c < sets.size(); ++c) {
        for (std::size_t i = 0; i < sets[c].size(); ++i) {
            component[sets[c][i]] = c;
            local[sets[c][i]] = i;
        }
    }
    std::vector<std::vector<LoopedGraph::Edge>> edges(sets.size());
    std::vector<std::vector<Vertex>> loops(sets.size());
    for (const auto& [u, v] : g.edges()) edges[component[u]].emplace_back(local[u], local[v]);
    for (Vertex v : g.loops()) loops[component[v]].push_back(local[v]);

    std::vector<LoopedGraph> out;
    out.reserve(sets.size());
    for (std::size_t c = 0; c < sets.size(); ++c) {
        out.emplace_back(sets[c].size(), std::move(edges[c]), std::move(loops[c]));
    }
    return out;
}

}  // namespace rigidbar
