#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "rigidbar/characterisation.hpp"
#include "rigidbar/graph.hpp"
#include "rigidbar/rigidity.hpp"

namespace rigidbar::cli {

using Json = nlohmann::ordered_json;

/// FNV-1a 64 of the canonical graph text, as "fnv1a64:<16 hex digits>".
std::string input_digest(const LoopedGraph& g);

Json to_json(const LoopedGraph& g);
Json to_json(const LoopedGraph& g, ElementId e);
Json to_json(const RankReport& r);
Json to_json(const LoopedGraph& g, const CharacterisationWitness& w);

/// Wraps a verdict with the bound on the probability that it is wrong.
Json randomized(bool verdict, double error_bound);

}  // namespace rigidbar::cli
