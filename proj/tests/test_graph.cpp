#include <gtest/gtest.h>

#include "rigidbar/error.hpp"
#include "rigidbar/generators.hpp"
#include "rigidbar/graph.hpp"
#include "rigidbar/graph_io.hpp"
#include "test_support.hpp"

using namespace rigidbar;
using namespace rigidbar::testing;

TEST(LoopedGraph, RejectsSelfEdgesParallelEdgesAndUnknownVertices) {
    EXPECT_THROW(LoopedGraph(2, {{0, 0}}), InputError);
    EXPECT_THROW(LoopedGraph(2, {{0, 1}, {1, 0}}), InputError);
    EXPECT_THROW(LoopedGraph(2, {{0, 2}}), InputError);
    EXPECT_THROW(LoopedGraph(2, {}, {2}), InputError);
    EXPECT_NO_THROW(LoopedGraph(1, {}, {0, 0, 0}));
}

TEST(LoopedGraph, ElementsAndSubgraphs) {
    const LoopedGraph g(3, {{0, 1}, {1, 2}}, {2, 0});
    EXPECT_EQ(g.elements().size(), 4u);
    EXPECT_EQ(g.endpoints(ElementId::loop(0)), (LoopedGraph::Edge{2, 2}));
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_EQ(g.edge_index(2, 1), std::optional<std::size_t>(1));

    const auto h = g.without(ElementId::edge(0));
    EXPECT_EQ(h.vertex_count(), 3u);
    EXPECT_EQ(h.edges(), (std::vector<LoopedGraph::Edge>{{1, 2}}));
    EXPECT_EQ(h.loops(), g.loops());
}

TEST(InducedCount, Examples) {
    EXPECT_EQ(induced_count(triangle(), std::vector<Vertex>{0, 1, 2}), 3u);
    EXPECT_EQ(induced_count(single_vertex(2), std::vector<Vertex>{0}), 2u);
    // K_4 with a loop per vertex, two adjacent vertices: 1 edge + 2 loops.
    EXPECT_EQ(induced_count(complete_graph(4, 1), std::vector<Vertex>{1, 3}), 3u);
}

TEST(InducedCount, RejectsUnknownVertex) {
    EXPECT_THROW(induced_count(triangle(), std::vector<Vertex>{0, 5}), InputError);
}

TEST(InducedCount, MonotoneAndCountsEverythingOnV) {
    RandomSource rs(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_looped_graph(rs, 1 + rs.below(7), 500'000, 0, 2);
        const std::size_t n = g.vertex_count();
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        EXPECT_EQ(induced_count(g, all), g.element_count());
        for (std::uint32_t x = 0; x < (1u << n); ++x) {
            for (std::uint32_t y = x;; y = (y - 1) & x) {
                std::vector<Vertex> xs, ys;
                for (Vertex v = 0; v < n; ++v) {
                    if (x >> v & 1) xs.push_back(v);
                    if (y >> v & 1) ys.push_back(v);
                }
                ASSERT_LE(induced_count(g, ys), induced_count(g, xs));
                if (y == 0) break;
            }
        }
    }
}

TEST(AddUniformLoops, Examples) {
    const auto g = triangle();
    EXPECT_EQ(add_uniform_loops(g, 0), g);
    const auto v3 = add_uniform_loops(single_vertex(0), 3);
    EXPECT_EQ(v3.vertex_count(), 1u);
    EXPECT_EQ(v3.loop_count(), 3u);
    const auto t1 = add_uniform_loops(g, 1);
    EXPECT_EQ(t1.vertex_count(), 3u);
    EXPECT_EQ(t1.edge_count(), 3u);
    EXPECT_EQ(t1.loop_count(), 3u);
}

TEST(AddUniformLoops, PreservesLoopIdsAndShiftsInducedCount) {
    RandomSource rs(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_looped_graph(rs, 1 + rs.below(6), 400'000, 0, 2);
        const std::size_t k = rs.below(4);
        const auto h = add_uniform_loops(g, k);
        for (std::size_t l = 0; l < g.loop_count(); ++l) ASSERT_EQ(h.loop_vertex(l), g.loop_vertex(l));
        const std::size_t n = g.vertex_count();
        for (std::uint32_t x = 1; x < (1u << n); ++x) {
            std::vector<Vertex> xs;
            for (Vertex v = 0; v < n; ++v) {
                if (x >> v & 1) xs.push_back(v);
            }
            ASSERT_EQ(induced_count(h, xs), induced_count(g, xs) + k * xs.size());
        }
    }
}

TEST(ContainsClique, Examples) {
    const auto k5 = contains_clique(complete_graph(5), 5);
    ASSERT_TRUE(k5);
    EXPECT_EQ(*k5, (VertexSubset{0, 1, 2, 3, 4}));
    EXPECT_FALSE(contains_clique(cycle(6), 3));

    const auto k5_minus = complete_graph(5).without(ElementId::edge(*complete_graph(5).edge_index(1, 3)));
    EXPECT_FALSE(contains_clique(k5_minus, 5));
    const auto four = contains_clique(k5_minus, 4);
    ASSERT_TRUE(four);
    EXPECT_FALSE(std::binary_search(four->begin(), four->end(), 1) &&
                 std::binary_search(four->begin(), four->end(), 3));
}

TEST(ContainsClique, AgreesWithExhaustiveEnumeration) {
    RandomSource rs(13);
    for (int trial = 0; trial < 400; ++trial) {
        const auto g = random_looped_graph(rs, 1 + rs.below(10), 200'000 + rs.below(700'000), 0, 1);
        for (std::size_t k = 1; k <= 6; ++k) {
            const auto found = contains_clique(g, k);
            ASSERT_EQ(found.has_value(), exhaustive_has_clique(g, k)) << dump_graph(g) << " k=" << k;
            if (found) {
                ASSERT_EQ(found->size(), k);
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = i + 1; j < k; ++j) ASSERT_TRUE(g.has_edge((*found)[i], (*found)[j]));
                }
            }
        }
    }
}

TEST(ContainsClique, ThroughPairFindsOnlyCliquesUsingThePair) {
    const auto k4 = complete_graph(4);
    EXPECT_TRUE(clique_through_pair(k4, 0, 1, 4));
    const auto g = k4.without(ElementId::edge(*k4.edge_index(0, 1)));
    const auto found = clique_through_pair(g, 0, 1, 4);
    ASSERT_TRUE(found);
    EXPECT_EQ(*found, (VertexSubset{0, 1, 2, 3}));
    EXPECT_FALSE(clique_through_pair(path(4), 0, 3, 3));
}

TEST(MinLoopDegree, Examples) {
    EXPECT_EQ(min_loop_degree(add_uniform_loops(cycle(5), 2)), 2u);
    EXPECT_EQ(min_loop_degree(LoopedGraph(2, {}, {0, 1, 1, 1})), 1u);
    EXPECT_EQ(min_loop_degree(triangle()), 0u);
    EXPECT_THROW(min_loop_degree(LoopedGraph()), InputError);
}

TEST(ConnectedComponents, Examples) {
    const auto g = triangle(1);
    const auto one = connected_components(g);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], g);

    const LoopedGraph two(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    const auto parts = connected_components(two);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0], triangle());
    EXPECT_EQ(parts[1], triangle());

    const LoopedGraph isolated(3, {}, {0, 2, 2});
    const auto singles = connected_components(isolated);
    ASSERT_EQ(singles.size(), 3u);
    EXPECT_EQ(singles[0].loop_count(), 1u);
    EXPECT_EQ(singles[1].loop_count(), 0u);
    EXPECT_EQ(singles[2].loop_count(), 2u);
}

TEST(GraphJson, CanonicalTextRoundTripsExactly) {
    RandomSource rs(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_looped_graph(rs, rs.below(8), 500'000, 0, 3);
        const auto text = dump_graph(g);
        const auto back = parse_graph(text);
        ASSERT_EQ(back, g);
        ASSERT_EQ(dump_graph(back), text);
    }
    const std::string doc = R"({"vertices":3,"edges":[[2,0],[1,2]],"loops":[1,1]})";
    EXPECT_EQ(dump_graph(parse_graph(doc)), doc);
}

TEST(GraphJson, RejectsMalformedDocuments) {
    EXPECT_THROW(parse_graph("not json"), InputError);
    EXPECT_THROW(parse_graph(R"({"edges":[]})"), InputError);
    EXPECT_THROW(parse_graph(R"({"vertices":-1})"), InputError);
    EXPECT_THROW(parse_graph(R"({"vertices":2,"edges":[[0,1,1]]})"), InputError);
    EXPECT_THROW(parse_graph(R"({"vertices":2,"edges":[[0,1],[1,0]]})"), InputError);
    EXPECT_THROW(parse_graph(R"({"vertices":2,"loops":[3]})"), InputError);
    EXPECT_THROW(parse_graph(R"({"vertices":2,"colour":"red"})"), InputError);
    EXPECT_EQ(parse_graph(R"({"vertices":2})").element_count(), 0u);
}
