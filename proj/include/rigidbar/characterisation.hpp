#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "rigidbar/graph.hpp"
#include "rigidbar/rigidity.hpp"
#include "rigidbar/sparsity.hpp"

namespace rigidbar {

struct SparsityViolation {
    VertexSubset vertices;
};

struct CliqueFound {
    VertexSubset vertices;
};

struct TightSubgraph {
    LoopedGraph graph;               // spanning, ids renumbered
    std::vector<ElementId> elements;  // the same elements as ids of the input graph
};

using CharacterisationWitness = std::variant<std::monostate, SparsityViolation, CliqueFound, TightSubgraph>;

/// Outcome of a combinatorial test. When hypothesis_ok is false (some vertex
/// has fewer than floor(d/2) loops) `verdict` carries no information and the
/// algebraic route must be used instead.
struct CharacterisationVerdict {
    bool verdict = false;
    bool hypothesis_ok = false;
    CharacterisationWitness witness;
};

/// floor(d/2): the loop degree under which the count characterisation holds.
constexpr std::size_t required_loop_degree(std::size_t d) { return d / 2; }

/// Independence in R^d for graphs with at least floor(d/2) loops at every
/// vertex: d-sparse and K_{d+2}-free. Requires d >= 2.
CharacterisationVerdict combinatorial_independent(const LoopedGraph& g, std::size_t d);

/// Rigidity in R^d under the same loop hypothesis. Builds a basis greedily:
/// floor(d/2) loops per vertex first, then the remaining loops by id, then
/// edges by id, keeping an element iff the set stays d-sparse and no K_{d+2}
/// appears. Rigid iff the basis has d|V| elements; the basis is returned as
/// a TightSubgraph witness.
CharacterisationVerdict combinatorial_rigid(const LoopedGraph& g, std::size_t d);

/// G': d loops at every pinned vertex and floor(d/2) at every other vertex.
LoopedGraph pinned_augmentation(const LoopedGraph& g, std::span<const Vertex> pinned, std::size_t d);

/// Sufficient condition for pinned independence of a loopless graph: G' is
/// d-sparse, and for odd d the graph has no K_{d+2}. False is inconclusive.
bool pinned_sufficiency(const LoopedGraph& g, std::span<const Vertex> pinned, std::size_t d);

struct ConjectureCheck {
    bool algebraic = false;      // G^{[d-t]} generically rigid in R^d (randomised)
    bool combinatorial = false;  // spanning t-tight K_{d+2}-free subgraph exists
    bool agree = false;
    bool tight_spanning = false;  // spanning t-tight subgraph exists (count only)
    bool in_proved_range = true;
    RankReport rank;
};

/// Compares both sides of the t-tight spanning subgraph characterisation for
/// G^{[d-t]} in R^d. Requires d >= 2 and d >= 2t-1 unless allow_open_range;
/// out of range the combinatorial side is the bare count condition and the
/// result is marked in_proved_range = false.
///
/// For d >= 2t a t-sparse graph cannot contain K_{d+2}, so the combinatorial
/// side is exactly the count condition. For d = 2t-1, K_{2t+1} is itself
/// t-tight but dependent in R^d, so the subgraph must also avoid it.
ConjectureCheck conjecture_instance_check(const LoopedGraph& g, std::size_t t, std::size_t d,
                                          RandomSource& rs, TrialOptions options = {},
                                          bool allow_open_range = false);

/// Adds vertex |V| joined to the d vertices of `attach`.
LoopedGraph zero_extension(const LoopedGraph& g, std::span<const Vertex> attach, std::size_t d);

/// Deletes edge xy and adds vertex |V| joined to x, y and the d-1 vertices of
/// `extra`, which must avoid x and y.
LoopedGraph one_extension(const LoopedGraph& g, ElementId edge, std::span<const Vertex> extra, std::size_t d);

namespace detail {

/// Greedy basis, in `order`, of {A : A is k-sparse and (V, A n E) has no
/// K_clique}. clique = 0 disables the clique condition.
std::vector<ElementId> greedy_sparse_clique_free(const LoopedGraph& g, std::size_t k, std::size_t clique,
                                                 std::span<const ElementId> order);

}  // namespace detail

}  // namespace rigidbar
