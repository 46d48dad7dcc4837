#include "rigidbar/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "rigidbar/error.hpp"

namespace rigidbar {

namespace {

void check_params(SparsityParams params) {
    if (params.k == 0) throw InputError("sparsity parameter k must be at least 1");
}

}  // namespace

PebbleGame::PebbleGame(std::size_t vertex_count, std::size_t k)
    : k_(k), free_(vertex_count, k), out_(vertex_count) {
    if (k == 0) throw InputError("pebble game needs k >= 1");
}

void PebbleGame::check_vertex(Vertex v) const {
    if (v >= free_.size()) throw InputError("pebble game: unknown vertex " + std::to_string(v));
}

// Depth-first search along out-edges from `target` for a vertex with a free
// pebble; on success the path is reversed and the pebble ends up on target.
bool PebbleGame::gather(Vertex target, std::vector<char>& visited) {
    if (free_[target] > 0) return true;
    const std::size_t n = free_.size();
    std::vector<Vertex> parent(n, n);
    std::vector<Vertex> stack{target};
    visited[target] = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : out_[x]) {
            if (visited[y]) continue;
            visited[y] = 1;
            parent[y] = x;
            if (free_[y] > 0) {
                --free_[y];
                ++free_[target];
                for (Vertex head = y; head != target;) {
                    const Vertex tail = parent[head];
                    auto& outs = out_[tail];
                    outs.erase(std::find(outs.begin(), outs.end(), head));
                    out_[head].push_back(tail);
                    head = tail;
                }
                return true;
            }
            stack.push_back(y);
        }
    }
    return false;
}

bool PebbleGame::gather_for_edge(Vertex u, Vertex v, Vertex& tail) {
    if (free_[u] > 0) {
        tail = u;
        return true;
    }
    if (free_[v] > 0) {
        tail = v;
        return true;
    }
    std::vector<char> visited(free_.size(), 0);
    visited[v] = 1;  // v has no free pebble; searching through it from u is wasted
    if (gather(u, visited)) {
        tail = u;
        return true;
    }
    std::vector<char> from_v(free_.size(), 0);
    if (gather(v, from_v)) {
        tail = v;
        return true;
    }
    blocking_.clear();
    for (Vertex x = 0; x < free_.size(); ++x) {
        if (visited[x] || from_v[x]) blocking_.push_back(x);
    }
    return false;
}

bool PebbleGame::can_insert_loop(Vertex v) {
    check_vertex(v);
    std::vector<char> visited(free_.size(), 0);
    if (gather(v, visited)) return true;
    blocking_.clear();
    for (Vertex x = 0; x < free_.size(); ++x) {
        if (visited[x]) blocking_.push_back(x);
    }
    return false;
}

bool PebbleGame::insert_loop(Vertex v) {
    if (!can_insert_loop(v)) return false;
    --free_[v];
    ++accepted_;
    return true;
}

bool PebbleGame::can_insert_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("pebble game: edge endpoints must differ");
    Vertex tail;
    return gather_for_edge(u, v, tail);
}

bool PebbleGame::insert_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("pebble game: edge endpoints must differ");
    Vertex tail;
    if (!gather_for_edge(u, v, tail)) return false;
    --free_[tail];
    out_[tail].push_back(tail == u ? v : u);
    ++accepted_;
    return true;
}

SparsityVerdict pebble_game(const LoopedGraph& g, SparsityParams params) {
    check_params(params);
    PebbleGame game(g.vertex_count(), params.k);
    SparsityVerdict verdict;
    for (std::size_t i = 0; i < g.loop_count(); ++i) {
        if (game.insert_loop(g.loop_vertex(i))) {
            verdict.basis.push_back(ElementId::loop(i));
        } else if (!verdict.violation) {
            verdict.violation = game.blocking_set();
        }
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto [u, v] = g.edge(i);
        if (game.insert_edge(u, v)) {
            verdict.basis.push_back(ElementId::edge(i));
        } else if (!verdict.violation) {
            verdict.violation = game.blocking_set();
        }
    }
    verdict.matroid_rank = game.accepted();
    verdict.is_sparse = game.accepted() == g.element_count();
    return verdict;
}

bool is_tight(const LoopedGraph& g, SparsityParams params) {
    return g.element_count() == params.k * g.vertex_count() && pebble_game(g, params).is_sparse;
}

std::optional<LoopedGraph> has_tight_spanning_subgraph(const LoopedGraph& g, SparsityParams params) {
    const auto verdict = pebble_game(g, params);
    if (*verdict.matroid_rank != params.k * g.vertex_count()) return std::nullopt;
    return g.spanning_subgraph(verdict.basis);
}

SparsityVerdict brute_force_sparse(const LoopedGraph& g, SparsityParams params) {
    check_params(params);
    const std::size_t n = g.vertex_count();
    if (n > kBruteForceMaxVertices) {
        throw InputError("brute_force_sparse supports at most " + std::to_string(kBruteForceMaxVertices) +
                         " vertices");
    }
    const std::size_t m = g.element_count();
    const bool with_rank = m <= kBruteForceMaxRankElements;
    const std::uint32_t subsets = std::uint32_t{1} << n;

    // Element endpoint masks, then for each X the mask of elements it induces.
    std::vector<std::uint32_t> ends;
    for (const auto& [u, v] : g.edges()) ends.push_back((1u << u) | (1u << v));
    for (Vertex v : g.loops()) ends.push_back(1u << v);

    std::vector<std::uint32_t> induced(with_rank ? subsets : 0, 0);
    SparsityVerdict verdict;
    std::optional<std::uint32_t> worst;
    for (std::uint32_t x = 1; x < subsets; ++x) {
        std::uint32_t mask = 0;
        std::size_t count = 0;
        for (std::size_t e = 0; e < m; ++e) {
            if ((ends[e] & x) == ends[e]) {
                ++count;
                if (with_rank) mask |= 1u << e;
            }
        }
        if (with_rank) induced[x] = mask;
        const auto size = static_cast<std::size_t>(std::popcount(x));
        if (count > params.k * size && (!worst || std::popcount(x) < std::popcount(*worst))) worst = x;
    }
    verdict.is_sparse = !worst.has_value();
    if (worst) {
        VertexSubset violation;
        for (Vertex v = 0; v < n; ++v) {
            if (*worst & (1u << v)) violation.push_back(v);
        }
        verdict.violation = std::move(violation);
    }
    if (!with_rank) return verdict;

    auto sparse = [&](std::uint32_t a) {
        for (std::uint32_t x = 1; x < subsets; ++x) {
            if (static_cast<std::size_t>(std::popcount(a & induced[x])) >
                params.k * static_cast<std::size_t>(std::popcount(x))) {
                return false;
            }
        }
        return true;
    };
    if (verdict.is_sparse) {
        verdict.matroid_rank = m;
        return verdict;
    }
    // Largest sparse subset: sizes from m-1 down, combinations in Gosper order.
    for (std::size_t s = m; s-- > 0;) {
        if (s == 0) {
            verdict.matroid_rank = 0;
            break;
        }
        const std::uint32_t limit = std::uint32_t{1} << m;
        bool found = false;
        for (std::uint32_t a = (std::uint32_t{1} << s) - 1; a < limit;) {
            if (sparse(a)) {
                found = true;
                break;
            }
            const std::uint32_t c = a & (~a + 1);
            const std::uint32_t r = a + c;
            a = (((r ^ a) >> 2) / c) | r;
        }
        if (found) {
            verdict.matroid_rank = s;
            break;
        }
    }
    return verdict;
}

}  // namespace rigidbar
