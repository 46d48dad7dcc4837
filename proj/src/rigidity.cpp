#include "rigidbar/rigidity.hpp"

#include <algorithm>
#include <iostream>

namespace rigidbar {

Realisation<Fp> random_field_realisation(const LoopedGraph& g, std::size_t dim, RandomSource& rs) {
    if (dim == 0) throw InputError("dimension must be at least 1");
    Realisation<Fp> r;
    r.dim = dim;
    for (Vertex v = 0; v < g.vertex_count(); ++v) r.points.push_back(random_assignment(rs, dim));
    for (std::size_t l = 0; l < g.loop_count(); ++l) r.normals.push_back(random_assignment(rs, dim));
    return r;
}

Realisation<Rational> random_integer_realisation(const LoopedGraph& g, std::size_t dim, RandomSource& rs,
                                                 std::int64_t bound) {
    if (dim == 0) throw InputError("dimension must be at least 1");
    auto draw = [&] {
        std::vector<Rational> x;
        for (std::size_t i = 0; i < dim; ++i) x.emplace_back(rs.uniform_int(-bound, bound));
        return x;
    };
    Realisation<Rational> r;
    r.dim = dim;
    for (Vertex v = 0; v < g.vertex_count(); ++v) r.points.push_back(draw());
    for (std::size_t l = 0; l < g.loop_count(); ++l) r.normals.push_back(draw());
    return r;
}

GenericRankOracle::GenericRankOracle(LoopedGraph g, std::size_t dim, RandomSource& rs, TrialOptions options)
    : graph_(std::move(g)), dim_(dim), options_(options) {
    if (dim_ == 0) throw InputError("dimension must be at least 1");
    if (options_.trials == 0) throw InputError("at least one trial is required");
    for (std::size_t t = 0; t < options_.trials; ++t) {
        samples_.push_back(build_matrix(graph_, random_field_realisation(graph_, dim_, rs)));
    }
}

std::size_t GenericRankOracle::rank() const {
    std::size_t best = 0;
    for (const auto& s : samples_) best = std::max(best, rigidbar::rank(s.matrix));
    return best;
}

std::size_t GenericRankOracle::rank(std::span<const ElementId> subset) const {
    std::size_t best = 0;
    std::vector<std::size_t> rows;
    rows.reserve(subset.size());
    for (ElementId e : subset) {
        if (!graph_.contains(e)) throw InputError("element not in graph");
    }
    for (const auto& s : samples_) {
        rows.clear();
        for (ElementId e : subset) rows.push_back(s.row_of(e));
        best = std::max(best, rigidbar::rank(s.matrix.select_rows(rows)));
        if (best == subset.size()) break;
    }
    return best;
}

double GenericRankOracle::failure_bound(std::size_t size) const {
    // A nonzero r x r minor has degree r in the coordinates, r <= min(rows, cols).
    return schwartz_zippel_bound(std::min(size, dim_ * graph_.vertex_count()), samples_.size());
}

RankReport GenericRankOracle::report() const {
    RankReport r;
    r.rank = rank();
    r.rows = graph_.element_count();
    r.cols = dim_ * graph_.vertex_count();
    r.trials = samples_.size();
    r.failure_bound = failure_bound(r.rows);
    if (options_.verbose) {
        std::cerr << "generic rank " << r.rank << " of " << r.rows << "x" << r.cols << " over "
                  << r.trials << " trial(s) mod 2^61-1; P(rank below generic) <= " << r.failure_bound << '\n';
    }
    return r;
}

RankReport generic_rank(const LoopedGraph& g, std::size_t dim, RandomSource& rs, TrialOptions options) {
    return GenericRankOracle(g, dim, rs, options).report();
}

bool is_independent(const LoopedGraph& g, std::size_t dim, RandomSource& rs, TrialOptions options) {
    return generic_rank(g, dim, rs, options).rank == g.element_count();
}

bool is_rigid(const LoopedGraph& g, std::size_t dim, RandomSource& rs, TrialOptions options) {
    return generic_rank(g, dim, rs, options).rank == dim * g.vertex_count();
}

RankReport generic_pinned_rank(const LoopedGraph& g, std::span<const Vertex> pinned, std::size_t dim,
                               RandomSource& rs, TrialOptions options) {
    if (options.trials == 0) throw InputError("at least one trial is required");
    RankReport r;
    r.trials = options.trials;
    for (std::size_t t = 0; t < options.trials; ++t) {
        const auto m = build_pinned_matrix(g, pinned, random_field_realisation(g, dim, rs));
        r.rows = m.rows();
        r.cols = m.cols();
        r.rank = std::max(r.rank, rank(m));
    }
    r.failure_bound = schwartz_zippel_bound(std::min(r.rows, r.cols), r.trials);
    if (options.verbose) {
        std::cerr << "generic pinned rank " << r.rank << " of " << r.rows << "x" << r.cols << " over "
                  << r.trials << " trial(s); P(rank below generic) <= " << r.failure_bound << '\n';
    }
    return r;
}

bool is_pinned_independent(const LoopedGraph& g, std::span<const Vertex> pinned, std::size_t dim,
                           RandomSource& rs, TrialOptions options) {
    return generic_pinned_rank(g, pinned, dim, rs, options).rank == g.edge_count();
}

std::vector<ElementId> loops_then_edges(const LoopedGraph& g) {
    std::vector<ElementId> order;
    order.reserve(g.element_count());
    for (std::size_t i = 0; i < g.loop_count(); ++i) order.push_back(ElementId::loop(i));
    for (std::size_t i = 0; i < g.edge_count(); ++i) order.push_back(ElementId::edge(i));
    return order;
}

std::optional<CircuitWitness> find_circuit(const GenericRankOracle& oracle) {
    auto current = loops_then_edges(oracle.graph());
    if (oracle.independent(current)) return std::nullopt;

    // One pass suffices: an element kept because its removal made the set
    // independent stays necessary, since subsets of independent sets are
    // independent.
    for (std::size_t i = 0; i < current.size();) {
        std::vector<ElementId> trial = current;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (!oracle.independent(trial)) {
            current = std::move(trial);
        } else {
            ++i;
        }
    }
    return CircuitWitness{current, current.front()};
}

std::optional<CircuitWitness> find_circuit(const LoopedGraph& g, std::size_t dim, RandomSource& rs,
                                           TrialOptions options) {
    return find_circuit(GenericRankOracle(g, dim, rs, options));
}

bool verify_circuit(const GenericRankOracle& oracle, const CircuitWitness& circuit) {
    const auto& c = circuit.elements;
    if (c.empty()) return false;
    if (oracle.rank(c) != c.size() - 1) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<ElementId> rest = c;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (!oracle.independent(rest)) return false;
    }
    return std::find(c.begin(), c.end(), circuit.pivot) != c.end();
}

bool fixed_vertex_check(const LoopedGraph& g, ElementId loop, std::size_t dim, RandomSource& rs,
                        TrialOptions options) {
    if (!loop.is_loop() || !g.contains(loop)) throw InputError("fixed_vertex_check needs a loop of the graph");
    const Vertex v = g.loop_vertex(loop.index);

    const GenericRankOracle oracle(g, dim, rs, options);
    const std::size_t full = oracle.rank();
    auto rest = g.elements();
    std::erase(rest, loop);
    if (oracle.rank(rest) != full) {
        throw HypothesisError("removing the loop drops the generic rank");
    }

    // The integer point must attain the generic rank for its motion space to
    // stand in for the generic one; redraw in the rare case it does not.
    constexpr int kAttempts = 8;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        const auto r = random_integer_realisation(g, dim, rs);
        const auto motions = motion_space(g, r);
        if (dim * g.vertex_count() - motions.size() != full) continue;
        return std::all_of(motions.begin(), motions.end(), [&](const Motion<Rational>& m) {
            return std::all_of(m.velocity[v].begin(), m.velocity[v].end(),
                               [](const Rational& x) { return is_zero(x); });
        });
    }
    throw std::runtime_error("no integer realisation of generic rank found");
}

}  // namespace rigidbar
