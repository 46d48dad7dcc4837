#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rigidbar/graph.hpp"

namespace rigidbar {

/// Count bound i(X) <= k|X| for every vertex set X.
struct SparsityParams {
    std::size_t k = 1;
};

struct SparsityVerdict {
    bool is_sparse = false;
    /// Size of a largest k-sparse subset of E u L. Left empty by the brute
    /// force oracle when the ground set is too large to enumerate.
    std::optional<std::size_t> matroid_rank;
    /// A vertex set with i(X) > k|X|, present iff !is_sparse.
    std::optional<VertexSubset> violation;
    /// Elements accepted by the pebble game (a basis of the count matroid);
    /// empty for the brute force oracle.
    std::vector<ElementId> basis;
};

/// Incremental (k,0) pebble game on a fixed vertex set.
///
/// Every vertex starts with k pebbles. An accepted element is oriented out of
/// a vertex and holds one of its pebbles; a loop holds a pebble at its own
/// vertex forever, an edge may be reversed to move a pebble along it. An
/// element is accepted iff one pebble can be brought to one of its ends, which
/// happens iff the accepted set plus the element is still k-sparse.
class PebbleGame {
public:
    PebbleGame(std::size_t vertex_count, std::size_t k);

    bool insert_loop(Vertex v);
    bool insert_edge(Vertex u, Vertex v);

    /// True iff the element could be inserted now. Pebbles may move, the
    /// accepted set does not change.
    bool can_insert_loop(Vertex v);
    bool can_insert_edge(Vertex u, Vertex v);

    std::size_t accepted() const { return accepted_; }
    std::size_t free_pebbles(Vertex v) const { return free_.at(v); }

    /// After a rejection: the vertices reachable from the element's ends. All
    /// their pebbles are used by accepted elements spanned by the set, so it
    /// carries exactly k|X| accepted elements.
    const VertexSubset& blocking_set() const { return blocking_; }

private:
    bool gather(Vertex target, std::vector<char>& visited);
    bool gather_for_edge(Vertex u, Vertex v, Vertex& tail);
    void check_vertex(Vertex v) const;

    std::size_t k_;
    std::size_t accepted_ = 0;
    std::vector<std::size_t> free_;
    std::vector<std::vector<Vertex>> out_;
    VertexSubset blocking_;
};

/// Exact (k,0)-sparsity verdict. Loops are inserted first (by id), then edges
/// (by id); the violation is the blocking set of the first rejection.
SparsityVerdict pebble_game(const LoopedGraph& g, SparsityParams params);

/// k-sparse and |E| + |L| = k|V|.
bool is_tight(const LoopedGraph& g, SparsityParams params);

/// A k-tight spanning subgraph of g, if one exists.
std::optional<LoopedGraph> has_tight_spanning_subgraph(const LoopedGraph& g, SparsityParams params);

inline constexpr std::size_t kBruteForceMaxVertices = 20;
inline constexpr std::size_t kBruteForceMaxRankElements = 22;

/// Enumerates every nonempty X. The reported violation is a smallest
/// violating set (ties broken by bitmask order). The rank is computed by
/// exhaustive subset search only when |E| + |L| <= 22.
SparsityVerdict brute_force_sparse(const LoopedGraph& g, SparsityParams params);

}  // namespace rigidbar
