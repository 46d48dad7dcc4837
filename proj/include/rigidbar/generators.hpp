#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rigidbar/algebra.hpp"
#include "rigidbar/graph.hpp"

namespace rigidbar {

/// Probabilities are given in parts per million so that generated graphs do
/// not depend on floating-point rounding.
inline constexpr std::uint64_t kPpm = 1'000'000;

/// Each pair of vertices is joined with probability edge_ppm / 10^6; each
/// vertex gets a uniform number of loops in [min_loops, max_loops].
LoopedGraph random_looped_graph(RandomSource& rs, std::size_t vertices, std::uint64_t edge_ppm,
                                std::size_t min_loops, std::size_t max_loops);

/// `elements` elements, each a loop at a uniform vertex or (when a free pair
/// remains) an edge on a uniform unused pair, with equal odds.
LoopedGraph random_element_graph(RandomSource& rs, std::size_t vertices, std::size_t elements);

/// A uniformly chosen 0-extension; absent when |V| < d.
std::optional<LoopedGraph> random_zero_extension(const LoopedGraph& g, std::size_t d, RandomSource& rs);

/// A uniformly chosen 1-extension; absent when g has no edge or |V| < d + 1.
std::optional<LoopedGraph> random_one_extension(const LoopedGraph& g, std::size_t d, RandomSource& rs);

/// Starts from one vertex with d loops and adds vertices of degree d until
/// there are `vertices` of them. While fewer than d vertices exist, the new
/// vertex is joined to all of them and takes the shortfall as loops, so every
/// step adds exactly d elements and the result is d-tight.
LoopedGraph zero_extension_chain(RandomSource& rs, std::size_t vertices, std::size_t d);

/// A 0-extension chain up to d + 1 vertices, continued by random
/// 1-extensions. Also d-tight.
LoopedGraph one_extension_chain(RandomSource& rs, std::size_t vertices, std::size_t d);

/// A uniform sorted k-subset of `pool`.
VertexSubset random_subset(RandomSource& rs, std::vector<Vertex> pool, std::size_t k);

}  // namespace rigidbar
