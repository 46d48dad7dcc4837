#include "rigidbar/characterisation.hpp"

#include <algorithm>
#include <string>

#include "rigidbar/error.hpp"

namespace rigidbar {

namespace {

void require_dimension(std::size_t d) {
    if (d < 2) throw InputError("the combinatorial characterisation needs d >= 2");
}

}  // namespace

namespace detail {

std::vector<ElementId> greedy_sparse_clique_free(const LoopedGraph& g, std::size_t k, std::size_t clique,
                                                 std::span<const ElementId> order) {
    const std::size_t n = g.vertex_count();
    PebbleGame game(n, k);
    std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
    std::vector<std::vector<Vertex>> neighbors(n);
    auto is_adjacent = [&adjacent](Vertex a, Vertex b) { return adjacent[a][b] != 0; };

    std::vector<ElementId> basis;
    for (ElementId e : order) {
        if (e.is_loop()) {
            if (game.insert_loop(g.loop_vertex(e.index))) basis.push_back(e);
            continue;
        }
        const auto [u, v] = g.edge(e.index);
        if (clique >= 2) {
            // A new K_clique must use uv, so look for K_{clique-2} among the
            // common neighbours.
            std::vector<Vertex> common;
            for (Vertex w : neighbors[u]) {
                if (adjacent[v][w]) common.push_back(w);
            }
            std::sort(common.begin(), common.end());
            std::vector<Vertex> found;
            if (detail::extend_clique(found, common, clique - 2, is_adjacent)) continue;
        }
        if (!game.insert_edge(u, v)) continue;
        adjacent[u][v] = adjacent[v][u] = 1;
        neighbors[u].push_back(v);
        neighbors[v].push_back(u);
        basis.push_back(e);
    }
    return basis;
}

}  // namespace detail

CharacterisationVerdict combinatorial_independent(const LoopedGraph& g, std::size_t d) {
    require_dimension(d);
    CharacterisationVerdict out;
    out.hypothesis_ok = g.vertex_count() == 0 || min_loop_degree(g) >= required_loop_degree(d);
    if (!out.hypothesis_ok) return out;

    const auto sparsity = pebble_game(g, {d});
    if (!sparsity.is_sparse) {
        out.witness = SparsityViolation{*sparsity.violation};
        return out;
    }
    if (auto clique = contains_clique(g, d + 2)) {
        out.witness = CliqueFound{std::move(*clique)};
        return out;
    }
    out.verdict = true;
    return out;
}

CharacterisationVerdict combinatorial_rigid(const LoopedGraph& g, std::size_t d) {
    require_dimension(d);
    CharacterisationVerdict out;
    out.hypothesis_ok = g.vertex_count() == 0 || min_loop_degree(g) >= required_loop_degree(d);
    if (!out.hypothesis_ok) return out;

    // Seed with the lowest-id floor(d/2) loops at each vertex.
    std::vector<ElementId> order;
    std::vector<char> seeded(g.loop_count(), 0);
    std::vector<std::size_t> taken(g.vertex_count(), 0);
    for (std::size_t l = 0; l < g.loop_count(); ++l) {
        const Vertex v = g.loop_vertex(l);
        if (taken[v] < required_loop_degree(d)) {
            ++taken[v];
            seeded[l] = 1;
            order.push_back(ElementId::loop(l));
        }
    }
    for (std::size_t l = 0; l < g.loop_count(); ++l) {
        if (!seeded[l]) order.push_back(ElementId::loop(l));
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) order.push_back(ElementId::edge(e));

    auto basis = detail::greedy_sparse_clique_free(g, d, d + 2, order);
    if (basis.size() != d * g.vertex_count()) return out;
    std::sort(basis.begin(), basis.end(), [](ElementId a, ElementId b) {
        return std::pair(a.is_loop(), a.index) < std::pair(b.is_loop(), b.index);
    });
    out.verdict = true;
    out.witness = TightSubgraph{g.spanning_subgraph(basis), std::move(basis)};
    return out;
}

LoopedGraph pinned_augmentation(const LoopedGraph& g, std::span<const Vertex> pinned, std::size_t d) {
    require_dimension(d);
    if (g.loop_count() != 0) throw InputError("pinned sufficiency needs a loopless graph");
    validate_subset(g, pinned);
    std::vector<Vertex> loops;
    for (Vertex v = 0, next = 0; v < g.vertex_count(); ++v) {
        const bool is_pinned = next < pinned.size() && pinned[next] == v;
        if (is_pinned) ++next;
        loops.insert(loops.end(), is_pinned ? d : required_loop_degree(d), v);
    }
    return LoopedGraph(g.vertex_count(), g.edges(), std::move(loops));
}

bool pinned_sufficiency(const LoopedGraph& g, std::span<const Vertex> pinned, std::size_t d) {
    const auto augmented = pinned_augmentation(g, pinned, d);
    if (!pebble_game(augmented, {d}).is_sparse) return false;
    return d % 2 == 0 || !contains_clique(g, d + 2).has_value();
}

ConjectureCheck conjecture_instance_check(const LoopedGraph& g, std::size_t t, std::size_t d,
                                          RandomSource& rs, TrialOptions options, bool allow_open_range) {
    if (t == 0) throw InputError("t must be at least 1");
    if (d < 2) throw InputError("d must be at least 2");
    if (d < t) throw InputError("d must be at least t");
    ConjectureCheck out;
    out.in_proved_range = d + 1 >= 2 * t;
    if (!out.in_proved_range && !allow_open_range) {
        throw InputError("d = " + std::to_string(d) + " < 2t - 1 = " + std::to_string(2 * t - 1) +
                         " is outside the proved range");
    }

    const auto lifted = add_uniform_loops(g, d - t);
    out.rank = generic_rank(lifted, d, rs, options);
    out.algebraic = out.rank.rank == d * g.vertex_count();

    out.tight_spanning = has_tight_spanning_subgraph(g, {t}).has_value();
    if (out.in_proved_range) {
        // Contracting the d-t added loops per vertex turns d-sparse &
        // K_{d+2}-free on G^{[d-t]} into t-sparse & K_{d+2}-free on G.
        const auto basis = detail::greedy_sparse_clique_free(g, t, d + 2, loops_then_edges(g));
        out.combinatorial = basis.size() == t * g.vertex_count();
    } else {
        out.combinatorial = out.tight_spanning;
    }
    out.agree = out.algebraic == out.combinatorial;
    return out;
}

LoopedGraph zero_extension(const LoopedGraph& g, std::span<const Vertex> attach, std::size_t d) {
    const auto targets = make_subset(g, {attach.begin(), attach.end()});
    if (targets.size() != d) {
        throw InputError("0-extension needs exactly d = " + std::to_string(d) + " attachment vertices");
    }
    const Vertex fresh = g.vertex_count();
    auto edges = g.edges();
    for (Vertex v : targets) edges.emplace_back(v, fresh);
    return LoopedGraph(g.vertex_count() + 1, std::move(edges), g.loops());
}

LoopedGraph one_extension(const LoopedGraph& g, ElementId edge, std::span<const Vertex> extra, std::size_t d) {
    if (edge.is_loop() || !g.contains(edge)) throw InputError("1-extension needs an edge of the graph");
    if (d == 0) throw InputError("dimension must be at least 1");
    const auto [x, y] = g.edge(edge.index);
    const auto others = make_subset(g, {extra.begin(), extra.end()});
    if (others.size() != d - 1) {
        throw InputError("1-extension needs exactly d - 1 = " + std::to_string(d - 1) + " extra vertices");
    }
    if (std::binary_search(others.begin(), others.end(), x) || std::binary_search(others.begin(), others.end(), y)) {
        throw InputError("1-extension extra vertices must avoid the split edge");
    }
    const Vertex fresh = g.vertex_count();
    auto edges = g.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge.index));
    edges.emplace_back(x, fresh);
    edges.emplace_back(y, fresh);
    for (Vertex v : others) edges.emplace_back(v, fresh);
    return LoopedGraph(g.vertex_count() + 1, std::move(edges), g.loops());
}

}  // namespace rigidbar
