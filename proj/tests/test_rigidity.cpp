#include <gtest/gtest.h>

#include "rigidbar/error.hpp"
#include "rigidbar/generators.hpp"
#include "rigidbar/graph_io.hpp"
#include "rigidbar/rigidity.hpp"
#include "test_support.hpp"

using namespace rigidbar;
using namespace rigidbar::testing;

namespace {

Realisation<Rational> integer_realisation(std::size_t d, const std::vector<std::vector<std::int64_t>>& p,
                                          const std::vector<std::vector<std::int64_t>>& q) {
    Realisation<Rational> r;
    r.dim = d;
    for (const auto& x : p) r.points.emplace_back(x.begin(), x.end());
    for (const auto& x : q) r.normals.emplace_back(x.begin(), x.end());
    return r;
}

std::vector<std::vector<std::int64_t>> random_coords(RandomSource& rs, std::size_t count, std::size_t d) {
    std::vector<std::vector<std::int64_t>> out(count, std::vector<std::int64_t>(d));
    for (auto& x : out) {
        for (auto& c : x) c = rs.uniform_int(-50, 50);
    }
    return out;
}

}  // namespace

TEST(BuildMatrix, SingleLoopRowIsTheNormal) {
    const auto g = single_vertex(1);
    const auto rm = build_matrix(g, integer_realisation(2, {{9, 9}}, {{3, -7}}));
    ASSERT_EQ(rm.matrix.rows(), 1u);
    ASSERT_EQ(rm.matrix.cols(), 2u);
    EXPECT_EQ(rm.matrix(0, 0), 3);
    EXPECT_EQ(rm.matrix(0, 1), -7);
    EXPECT_EQ(rm.row_index[0], ElementId::loop(0));
}

TEST(BuildMatrix, SingleEdgeInOneDimension) {
    const LoopedGraph g(2, {{0, 1}});
    const auto rm = build_matrix(g, integer_realisation(1, {{5}, {2}}, {}));
    EXPECT_EQ(rm.matrix(0, 0), 3);   // s - t
    EXPECT_EQ(rm.matrix(0, 1), -3);  // t - s
}

TEST(BuildMatrix, MatchesDefinitionEntryByEntry) {
    RandomSource rs(21);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = trial == 0 ? triangle(1) : random_looped_graph(rs, 1 + rs.below(6), 500'000, 0, 2);
        const std::size_t d = trial == 0 ? 2 : 1 + rs.below(4);
        const auto p = random_coords(rs, g.vertex_count(), d);
        const auto q = random_coords(rs, g.loop_count(), d);
        const auto rm = build_matrix(g, integer_realisation(d, p, q));
        const auto expected = definition_rows(g, d, p, q);
        ASSERT_EQ(rm.matrix.rows(), g.element_count());
        ASSERT_EQ(rm.matrix.cols(), d * g.vertex_count());
        if (trial == 0) {
            ASSERT_EQ(rm.matrix.rows(), 6u);
            ASSERT_EQ(rm.matrix.cols(), 6u);
        }
        for (std::size_t r = 0; r < rm.matrix.rows(); ++r) {
            ASSERT_EQ(rm.row_of(rm.row_index[r]), r);
            std::size_t nonzero = 0;
            for (std::size_t c = 0; c < rm.matrix.cols(); ++c) {
                ASSERT_EQ(rm.matrix(r, c), Rational(expected[r][c]));
                nonzero += !is_zero(rm.matrix(r, c));
            }
            ASSERT_LE(nonzero, rm.row_index[r].is_loop() ? d : 2 * d);
        }
        for (std::size_t c = 0; c < rm.matrix.cols(); ++c) {
            ASSERT_EQ(rm.col_index[c], (std::pair<Vertex, std::size_t>{c / d, c % d}));
        }
        // Edge rows: entry at v_i is the negation of the entry at v_j.
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto [u, v] = g.edge(e);
            for (std::size_t i = 0; i < d; ++i) ASSERT_EQ(rm.matrix(e, d * u + i), -rm.matrix(e, d * v + i));
        }
    }
}

TEST(BuildMatrix, RejectsIncompleteRealisation) {
    Realisation<Fp> r;
    r.dim = 2;
    r.points = {{1, 2}};
    EXPECT_THROW(build_matrix(LoopedGraph(2, {{0, 1}}), r), InputError);
    r.points.push_back({3});
    EXPECT_THROW(build_matrix(LoopedGraph(2, {{0, 1}}), r), InputError);
}

TEST(PinnedMatrix, Examples) {
    const auto tri = triangle();
    RandomSource rs(22);
    const auto r = random_field_realisation(tri, 2, rs);
    const std::vector<Vertex> all{0, 1, 2};
    const auto m = build_pinned_matrix(tri, all, r);
    EXPECT_EQ(m.cols(), 0u);
    EXPECT_EQ(m.rows(), 3u);
    EXPECT_FALSE(is_pinned_independent(tri, all, 2, rs));
    EXPECT_TRUE(is_pinned_independent(LoopedGraph(3, {}), all, 2, rs));

    const LoopedGraph edge(2, {{0, 1}});
    const auto single = build_pinned_matrix(edge, std::vector<Vertex>{0},
                                            integer_realisation(2, {{1, 2}, {7, -3}}, {}));
    ASSERT_EQ(single.rows(), 1u);
    ASSERT_EQ(single.cols(), 2u);
    EXPECT_EQ(single(0, 0), 6);
    EXPECT_EQ(single(0, 1), -5);

    // Path u - v - w with both ends pinned: the oracle sees rank 2 on the
    // columns of v.
    const auto p3 = path(3);
    const std::vector<Vertex> ends{0, 2};
    const auto pinned = build_pinned_matrix(p3, ends, random_field_realisation(p3, 2, rs));
    EXPECT_EQ(pinned.rows(), 2u);
    EXPECT_EQ(pinned.cols(), 2u);
    const std::vector<std::vector<std::int64_t>> pts{{3, 1}, {-4, 2}, {5, 9}};
    auto rows = definition_rows(p3, 2, pts, {});
    for (auto& row : rows) row = {row[2], row[3]};
    EXPECT_EQ(bareiss_rank(rows), 2u);
    EXPECT_EQ(generic_pinned_rank(p3, ends, 2, rs).rank, 2u);

    EXPECT_THROW(build_pinned_matrix(triangle(1), ends, random_field_realisation(triangle(1), 2, rs)), InputError);
}

TEST(PinnedMatrix, EmptyPinSetIsBarJointIndependence) {
    RandomSource rs(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_looped_graph(rs, 1 + rs.below(7), 600'000, 0, 0);
        const std::size_t d = 2 + rs.below(2);
        ASSERT_EQ(is_pinned_independent(g, {}, d, rs), is_independent(g, d, rs));
    }
}

TEST(GenericRank, Examples) {
    RandomSource rs(24);
    EXPECT_EQ(generic_rank(single_vertex(3), 3, rs).rank, 3u);

    const auto k4 = complete_graph(4);
    const auto r = generic_rank(k4, 2, rs);
    EXPECT_EQ(r.rank, k4.edge_count() - 1);
    EXPECT_EQ(r.rank, oracle_generic_rank(k4, 2, 24));
    EXPECT_EQ(r.rank, 2u * 4 - 3);

    EXPECT_EQ(generic_rank(triangle(1), 2, rs).rank, 6u);
    EXPECT_EQ(oracle_generic_rank(triangle(1), 2, 24), 6u);
    EXPECT_LE(r.failure_bound, 1e-10);
}

TEST(GenericRank, AgreesWithIntegerPointOracle) {
    RandomSource rs(25);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_looped_graph(rs, 1 + rs.below(6), 200'000 + rs.below(600'000), 0, 3);
        const std::size_t d = 1 + rs.below(4);
        ASSERT_EQ(generic_rank(g, d, rs).rank, oracle_generic_rank(g, d, trial)) << dump_graph(g) << " d=" << d;
    }
}

TEST(GenericRank, MonotoneUnderAddingElements) {
    RandomSource rs(26);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_looped_graph(rs, 2 + rs.below(5), 500'000, 0, 2);
        const std::size_t d = 2 + rs.below(2);
        const GenericRankOracle oracle(g, d, rs);
        auto elements = g.elements();
        rs.shuffle(elements.begin(), elements.end());
        std::size_t previous = 0;
        for (std::size_t i = 0; i <= elements.size(); ++i) {
            const std::span<const ElementId> prefix(elements.data(), i);
            const auto r = oracle.rank(prefix);
            ASSERT_GE(r, previous);
            ASSERT_LE(r, i);
            previous = r;
        }
        if (is_independent(g, d, rs)) {
            for (ElementId e : g.elements()) ASSERT_TRUE(is_independent(g.without(e), d, rs));
        }
    }
}

TEST(IsIndependent, Examples) {
    RandomSource rs(27);
    EXPECT_TRUE(is_independent(LoopedGraph(2, {}), 2, rs));
    EXPECT_FALSE(is_independent(single_vertex(3), 2, rs));
    EXPECT_FALSE(is_independent(complete_graph(4), 2, rs));
}

TEST(IsRigid, Examples) {
    RandomSource rs(28);
    for (std::size_t d = 1; d <= 4; ++d) {
        EXPECT_TRUE(is_rigid(single_vertex(d), d, rs));
        EXPECT_FALSE(is_rigid(single_vertex(d - 1), d, rs));
    }
    EXPECT_TRUE(is_rigid(triangle(1), 2, rs));
}

TEST(MotionSpace, Examples) {
    RandomSource rs(29);
    const auto v2 = single_vertex(2);
    EXPECT_TRUE(motion_space(v2, random_integer_realisation(v2, 2, rs)).empty());

    const auto v1 = single_vertex(1);
    const auto r1 = integer_realisation(2, {{4, 4}}, {{1, 0}});
    const auto motions = motion_space(v1, r1);
    ASSERT_EQ(motions.size(), 1u);
    EXPECT_EQ(motions[0].velocity[0][0], 0);
    EXPECT_NE(motions[0].velocity[0][1], 0);

    const LoopedGraph edge(2, {{0, 1}});
    EXPECT_EQ(motion_space(edge, random_integer_realisation(edge, 2, rs)).size(), 3u);
}

TEST(MotionSpace, EveryBasisMotionSolvesTheConstraints) {
    RandomSource rs(30);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_looped_graph(rs, 1 + rs.below(6), 500'000, 0, 2);
        const std::size_t d = 1 + rs.below(3);
        const auto r = random_integer_realisation(g, d, rs, 20);
        const auto motions = motion_space(g, r);
        const auto rm = build_matrix(g, r);
        ASSERT_EQ(motions.size(), d * g.vertex_count() - rank(rm.matrix));
        for (const auto& m : motions) ASSERT_TRUE(satisfies_motion_equations(g, r, m));

        const auto fr = random_field_realisation(g, d, rs);
        for (const auto& m : motion_space(g, fr)) ASSERT_TRUE(satisfies_motion_equations(g, fr, m));
    }
}

TEST(FindCircuit, IndependentGraphHasNone) {
    RandomSource rs(31);
    EXPECT_FALSE(find_circuit(triangle(1), 2, rs));
}

TEST(FindCircuit, KFourWithPendantEdge) {
    RandomSource rs(32);
    auto edges = complete_graph(4).edges();
    edges.emplace_back(3, 4);
    const LoopedGraph g(5, edges);
    const GenericRankOracle oracle(g, 2, rs);
    const auto circuit = find_circuit(oracle);
    ASSERT_TRUE(circuit);
    std::vector<ElementId> expected;
    for (std::size_t e = 0; e < 6; ++e) expected.push_back(ElementId::edge(e));
    EXPECT_EQ(circuit->elements, expected);
    EXPECT_TRUE(verify_circuit(oracle, *circuit));
    // Every proper subset of the K_4 edges is independent.
    for (std::uint32_t mask = 0; mask + 1 < (1u << 6); ++mask) {
        std::vector<ElementId> subset;
        for (std::size_t e = 0; e < 6; ++e) {
            if (mask >> e & 1) subset.push_back(ElementId::edge(e));
        }
        ASSERT_TRUE(oracle.independent(subset));
    }
}

TEST(FindCircuit, ThreeLoopsInThePlane) {
    RandomSource rs(33);
    const auto circuit = find_circuit(single_vertex(3), 2, rs);
    ASSERT_TRUE(circuit);
    EXPECT_EQ(circuit->elements,
              (std::vector<ElementId>{ElementId::loop(0), ElementId::loop(1), ElementId::loop(2)}));
    EXPECT_EQ(circuit->pivot, ElementId::loop(0));
}

TEST(FindCircuit, RandomCircuitsAreMinimal) {
    RandomSource rs(34);
    int found = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_looped_graph(rs, 2 + rs.below(5), 600'000, 0, 2);
        const std::size_t d = 2 + rs.below(2);
        const GenericRankOracle oracle(g, d, rs);
        const auto circuit = find_circuit(oracle);
        ASSERT_EQ(circuit.has_value(), oracle.rank() < g.element_count());
        if (!circuit) continue;
        ++found;
        ASSERT_TRUE(verify_circuit(oracle, *circuit));
        ASSERT_EQ(circuit->pivot, circuit->elements.front());
    }
    EXPECT_GT(found, 5);
}

TEST(FixedVertexCheck, Examples) {
    RandomSource rs(35);
    for (std::size_t l = 0; l < 3; ++l) EXPECT_TRUE(fixed_vertex_check(single_vertex(3), ElementId::loop(l), 2, rs));

    // K_4 with one loop everywhere and a second loop at vertex 0.
    auto g = complete_graph(4, 1);
    auto loops = g.loops();
    loops.push_back(0);
    g = LoopedGraph(4, g.edges(), loops);
    // Removing a loop at vertex 0 keeps the rank, so each such loop lies in
    // a circuit through vertex 0.
    const GenericRankOracle oracle(g, 2, rs);
    std::size_t checked = 0;
    for (std::size_t l = 0; l < g.loop_count(); ++l) {
        if (g.loop_vertex(l) != 0) continue;
        auto rest = g.elements();
        std::erase(rest, ElementId::loop(l));
        ASSERT_EQ(oracle.rank(rest), oracle.rank());
        EXPECT_TRUE(fixed_vertex_check(g, ElementId::loop(l), 2, rs));
        ++checked;
    }
    EXPECT_EQ(checked, 2u);
}

TEST(FixedVertexCheck, RejectsHypothesisViolationAndNonLoops) {
    RandomSource rs(36);
    EXPECT_THROW(fixed_vertex_check(single_vertex(2), ElementId::loop(0), 2, rs), HypothesisError);
    EXPECT_THROW(fixed_vertex_check(triangle(1), ElementId::edge(0), 2, rs), InputError);
    EXPECT_THROW(fixed_vertex_check(triangle(1), ElementId::loop(7), 2, rs), InputError);
}
