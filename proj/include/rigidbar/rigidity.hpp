#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rigidbar/algebra.hpp"
#include "rigidbar/graph.hpp"

namespace rigidbar {

/// Points p(v) and loop normals q(l) in F^dim.
template <class F>
struct Realisation {
    std::size_t dim = 0;
    std::vector<std::vector<F>> points;   // by vertex
    std::vector<std::vector<F>> normals;  // by loop id
};

template <class F>
void validate_realisation(const LoopedGraph& g, const Realisation<F>& r) {
    if (r.dim == 0) throw InputError("realisation dimension must be at least 1");
    if (r.points.size() != g.vertex_count()) throw InputError("realisation does not cover every vertex");
    if (r.normals.size() != g.loop_count()) throw InputError("realisation does not cover every loop");
    for (const auto& p : r.points) {
        if (p.size() != r.dim) throw InputError("point of wrong dimension");
    }
    for (const auto& q : r.normals) {
        if (q.size() != r.dim) throw InputError("loop normal of wrong dimension");
    }
}

/// Uniform random realisation over the prime field.
Realisation<Fp> random_field_realisation(const LoopedGraph& g, std::size_t dim, RandomSource& rs);

/// Realisation with integer coordinates drawn uniformly from [-bound, bound].
Realisation<Rational> random_integer_realisation(const LoopedGraph& g, std::size_t dim,
                                                 RandomSource& rs, std::int64_t bound = 1'000'000);

/// R(G, p, q). Rows are the edges by id followed by the loops by id; column
/// d*v + i is coordinate i of vertex v.
template <class F>
struct RigidityMatrix {
    Matrix<F> matrix;
    std::vector<ElementId> row_index;
    std::vector<std::pair<Vertex, std::size_t>> col_index;
    std::size_t edge_rows = 0;

    std::size_t row_of(ElementId e) const { return e.is_loop() ? edge_rows + e.index : e.index; }
};

template <class F>
RigidityMatrix<F> build_matrix(const LoopedGraph& g, const Realisation<F>& r) {
    validate_realisation(g, r);
    const std::size_t d = r.dim;
    RigidityMatrix<F> out;
    out.matrix = Matrix<F>(g.element_count(), d * g.vertex_count());
    out.edge_rows = g.edge_count();
    out.row_index = g.elements();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t i = 0; i < d; ++i) out.col_index.emplace_back(v, i);
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        for (std::size_t i = 0; i < d; ++i) {
            const F diff = r.points[u][i] - r.points[v][i];
            out.matrix(e, d * u + i) = diff;
            out.matrix(e, d * v + i) = -diff;
        }
    }
    for (std::size_t l = 0; l < g.loop_count(); ++l) {
        const Vertex v = g.loop_vertex(l);
        for (std::size_t i = 0; i < d; ++i) out.matrix(g.edge_count() + l, d * v + i) = r.normals[l][i];
    }
    return out;
}

/// R^{pin}(G, P, p): bar-joint matrix of a loopless graph with the column
/// blocks of the pinned vertices deleted. Remaining blocks keep vertex order.
template <class F>
Matrix<F> build_pinned_matrix(const LoopedGraph& g, std::span<const Vertex> pinned, const Realisation<F>& r) {
    if (g.loop_count() != 0) throw InputError("pinned rigidity matrix needs a loopless graph");
    validate_subset(g, pinned);
    validate_realisation(g, r);
    const std::size_t d = r.dim;
    std::vector<std::size_t> block(g.vertex_count(), SIZE_MAX);
    std::size_t free_count = 0;
    for (Vertex v = 0, next = 0; v < g.vertex_count(); ++v) {
        if (next < pinned.size() && pinned[next] == v) {
            ++next;
            continue;
        }
        block[v] = free_count++;
    }
    Matrix<F> m(g.edge_count(), d * free_count);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        for (std::size_t i = 0; i < d; ++i) {
            const F diff = r.points[u][i] - r.points[v][i];
            if (block[u] != SIZE_MAX) m(e, d * block[u] + i) = diff;
            if (block[v] != SIZE_MAX) m(e, d * block[v] + i) = -diff;
        }
    }
    return m;
}

struct TrialOptions {
    std::size_t trials = 3;
    bool verbose = false;  // print rank, trials and failure bound to stderr
};

/// Randomised rank with one-sided error: `rank` never exceeds the generic
/// rank and falls below it with probability at most `failure_bound`.
struct RankReport {
    std::size_t rank = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t trials = 0;
    double failure_bound = 0.0;
};

/// Generic-rank oracle for subsets of E u L. Holds `trials` independent
/// random prime-field realisations of g and answers with the maximum rank
/// over them.
class GenericRankOracle {
public:
    GenericRankOracle(LoopedGraph g, std::size_t dim, RandomSource& rs, TrialOptions options = {});

    const LoopedGraph& graph() const { return graph_; }
    std::size_t dim() const { return dim_; }
    std::size_t trials() const { return samples_.size(); }

    std::size_t rank() const;
    std::size_t rank(std::span<const ElementId> subset) const;
    bool independent(std::span<const ElementId> subset) const { return rank(subset) == subset.size(); }

    /// Failure bound for the rank of a subset of `size` rows.
    double failure_bound(std::size_t size) const;

    RankReport report() const;

private:
    LoopedGraph graph_;
    std::size_t dim_;
    TrialOptions options_;
    std::vector<RigidityMatrix<Fp>> samples_;
};

RankReport generic_rank(const LoopedGraph& g, std::size_t dim, RandomSource& rs, TrialOptions options = {});

/// generic rank == |E| + |L|.
bool is_independent(const LoopedGraph& g, std::size_t dim, RandomSource& rs, TrialOptions options = {});

/// generic rank == d|V|.
bool is_rigid(const LoopedGraph& g, std::size_t dim, RandomSource& rs, TrialOptions options = {});

RankReport generic_pinned_rank(const LoopedGraph& g, std::span<const Vertex> pinned, std::size_t dim,
                               RandomSource& rs, TrialOptions options = {});

/// Rows of R^{pin}(G, P, p) independent at a generic p (randomised).
bool is_pinned_independent(const LoopedGraph& g, std::span<const Vertex> pinned, std::size_t dim,
                           RandomSource& rs, TrialOptions options = {});

/// An infinitesimal motion: one velocity vector per vertex.
template <class F>
struct Motion {
    std::vector<std::vector<F>> velocity;
};

/// Basis of the infinitesimal motions of (g, r); empty iff infinitesimally
/// rigid.
template <class F>
std::vector<Motion<F>> motion_space(const LoopedGraph& g, const Realisation<F>& r) {
    const auto rm = build_matrix(g, r);
    std::vector<Motion<F>> out;
    for (auto& x : nullspace_basis(rm.matrix)) {
        Motion<F> m;
        m.velocity.assign(g.vertex_count(), std::vector<F>(r.dim, F(0)));
        for (std::size_t c = 0; c < x.size(); ++c) {
            const auto [v, i] = rm.col_index[c];
            m.velocity[v][i] = x[c];
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// Checks the edge equations (p_i - p_j).(m_i - m_j) = 0 and loop equations
/// q_l . m_v = 0 by direct substitution.
template <class F>
bool satisfies_motion_equations(const LoopedGraph& g, const Realisation<F>& r, const Motion<F>& m) {
    if (m.velocity.size() != g.vertex_count()) return false;
    for (const auto& [u, v] : g.edges()) {
        F dot(0);
        for (std::size_t i = 0; i < r.dim; ++i) {
            dot += (r.points[u][i] - r.points[v][i]) * (m.velocity[u][i] - m.velocity[v][i]);
        }
        if (!is_zero(dot)) return false;
    }
    for (std::size_t l = 0; l < g.loop_count(); ++l) {
        const Vertex v = g.loop_vertex(l);
        F dot(0);
        for (std::size_t i = 0; i < r.dim; ++i) dot += r.normals[l][i] * m.velocity[v][i];
        if (!is_zero(dot)) return false;
    }
    return true;
}

/// A minimal dependent set of E u L. `pivot` is the first circuit element in
/// scan order (loops by id, then edges by id).
struct CircuitWitness {
    std::vector<ElementId> elements;
    ElementId pivot;
};

/// Scan order used for circuit extraction: loops by id, then edges by id.
std::vector<ElementId> loops_then_edges(const LoopedGraph& g);

/// Absent when g is independent. Otherwise deletes, in scan order, every
/// element whose removal leaves a dependent set; what remains is a circuit.
std::optional<CircuitWitness> find_circuit(const LoopedGraph& g, std::size_t dim, RandomSource& rs,
                                           TrialOptions options = {});
std::optional<CircuitWitness> find_circuit(const GenericRankOracle& oracle);

/// rank(C) = |C| - 1 and rank(C - x) = |C| - 1 for every x in C.
bool verify_circuit(const GenericRankOracle& oracle, const CircuitWitness& circuit);

/// For a loop l at v with rank(G) = rank(G - l): true iff every infinitesimal
/// motion at a random integer realisation of generic rank fixes v. Throws
/// HypothesisError if removing l drops the rank.
bool fixed_vertex_check(const LoopedGraph& g, ElementId loop, std::size_t dim, RandomSource& rs,
                        TrialOptions options = {});

}  // namespace rigidbar
