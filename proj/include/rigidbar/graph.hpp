#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rigidbar {

using Vertex = std::size_t;

/// Sorted, duplicate-free set of vertex ids.
using VertexSubset = std::vector<Vertex>;

enum class ElementKind : std::uint8_t { Edge, Loop };

/// An edge or a loop of a LoopedGraph, addressed by its position in the
/// graph's edge list or loop list.
struct ElementId {
    ElementKind kind = ElementKind::Edge;
    std::size_t index = 0;

    static constexpr ElementId edge(std::size_t i) { return {ElementKind::Edge, i}; }
    static constexpr ElementId loop(std::size_t i) { return {ElementKind::Loop, i}; }

    bool is_loop() const { return kind == ElementKind::Loop; }

    auto operator<=>(const ElementId&) const = default;
};

/// A looped simple graph G = (V, E, L).
///
/// Vertices are 0..n-1. Edges join distinct vertices and no pair is joined
/// twice. Loops are identified by their position in the loop list; any number
/// of loops may sit at the same vertex. Instances are immutable.
class LoopedGraph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    LoopedGraph() = default;

    /// Throws InputError on self-edges, parallel edges or unknown vertices.
    LoopedGraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Vertex> loops = {});

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t loop_count() const { return loops_.size(); }
    std::size_t element_count() const { return edges_.size() + loops_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    /// Vertex of each loop, indexed by loop id.
    const std::vector<Vertex>& loops() const { return loops_; }

    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    Vertex loop_vertex(std::size_t i) const { return loops_.at(i); }

    bool contains(ElementId e) const;

    /// Endpoints of an element; a loop returns (v, v).
    Edge endpoints(ElementId e) const;

    bool has_edge(Vertex u, Vertex v) const;
    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

    /// Sorted neighbours of v in the underlying simple graph.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    std::size_t loops_at(Vertex v) const { return loops_at_.at(v); }

    /// Edges by id, then loops by id.
    std::vector<ElementId> elements() const;

    /// Spanning subgraph keeping only `keep`. Edge and loop ids are
    /// renumbered densely in the order of the original ids.
    LoopedGraph spanning_subgraph(std::span<const ElementId> keep) const;
    LoopedGraph without(ElementId e) const;

    bool operator==(const LoopedGraph& other) const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Vertex> loops_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::size_t> loops_at_;
};

/// Throws InputError unless x is sorted, duplicate-free and inside V(g).
void validate_subset(const LoopedGraph& g, std::span<const Vertex> x);

/// Normalises an arbitrary list of vertex ids into a VertexSubset of g.
VertexSubset make_subset(const LoopedGraph& g, std::vector<Vertex> ids);

/// i(X): number of edges with both ends in X plus loops at vertices of X.
std::size_t induced_count(const LoopedGraph& g, std::span<const Vertex> x);

/// G^{[k]}: k fresh loops at every vertex, appended after the existing loops
/// (vertex-major) so existing loop ids are unchanged.
LoopedGraph add_uniform_loops(const LoopedGraph& g, std::size_t k);

/// A vertex set spanning a complete subgraph K_k of (V, E), if any. Loops are
/// ignored. Exponential in k in the worst case.
std::optional<VertexSubset> contains_clique(const LoopedGraph& g, std::size_t k);

/// A K_k containing both u and v, where u and v are treated as adjacent even
/// if the edge uv is not (yet) in g.
std::optional<VertexSubset> clique_through_pair(const LoopedGraph& g, Vertex u, Vertex v,
                                                std::size_t k);

/// Minimum number of loops at a vertex. Throws InputError on the empty graph.
std::size_t min_loop_degree(const LoopedGraph& g);

/// Components as standalone graphs with vertices relabelled 0..m-1 in
/// increasing order of original id; each loop travels with its vertex.
std::vector<LoopedGraph> connected_components(const LoopedGraph& g);

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexSubset> component_vertex_sets(const LoopedGraph& g);

namespace detail {

/// Depth-first clique extension. `candidates` must be sorted; `adjacent` is a
/// symmetric predicate. Returns k vertices from candidates forming a clique.
template <class Adjacent>
bool extend_clique(std::vector<Vertex>& clique, std::span<const Vertex> candidates,
                   std::size_t k, const Adjacent& adjacent) {
    if (clique.size() == k) return true;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (clique.size() + (candidates.size() - i) < k) return false;
        const Vertex v = candidates[i];
        std::vector<Vertex> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (adjacent(v, candidates[j])) next.push_back(candidates[j]);
        }
        if (clique.size() + 1 + next.size() < k) continue;
        clique.push_back(v);
        if (extend_clique(clique, next, k, adjacent)) return true;
        clique.pop_back();
    }
    return false;
}

}  // namespace detail

}  // namespace rigidbar
