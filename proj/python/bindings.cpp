#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rigidbar/characterisation.hpp"
#include "rigidbar/generators.hpp"
#include "rigidbar/graph_io.hpp"
#include "rigidbar/rigidity.hpp"
#include "rigidbar/sparsity.hpp"

namespace py = pybind11;
using namespace rigidbar;

namespace {

py::tuple element(ElementId e) { return py::make_tuple(e.is_loop() ? "loop" : "edge", e.index); }

py::list elements(const std::vector<ElementId>& es) {
    py::list out;
    for (ElementId e : es) out.append(element(e));
    return out;
}

py::dict rank_dict(const RankReport& r) {
    py::dict out;
    out["rank"] = r.rank;
    out["rows"] = r.rows;
    out["cols"] = r.cols;
    out["trials"] = r.trials;
    out["failure_bound"] = r.failure_bound;
    return out;
}

py::dict verdict_dict(const CharacterisationVerdict& v) {
    py::dict out;
    out["verdict"] = v.verdict;
    out["hypothesis_ok"] = v.hypothesis_ok;
    std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, SparsityViolation>) {
                out["violation"] = w.vertices;
            } else if constexpr (std::is_same_v<W, CliqueFound>) {
                out["clique"] = w.vertices;
            } else if constexpr (std::is_same_v<W, TightSubgraph>) {
                out["basis"] = elements(w.elements);
            }
        },
        v.witness);
    return out;
}

TrialOptions trials(std::size_t n) { return TrialOptions{n, false}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generic rigidity of linearly constrained bar-joint frameworks";

    py::class_<LoopedGraph>(m, "Graph")
        .def(py::init<std::size_t, std::vector<LoopedGraph::Edge>, std::vector<Vertex>>(), py::arg("vertices"),
             py::arg("edges") = std::vector<LoopedGraph::Edge>{}, py::arg("loops") = std::vector<Vertex>{})
        .def_static("from_json", &parse_graph, py::arg("text"))
        .def("to_json", &dump_graph)
        .def_property_readonly("vertex_count", &LoopedGraph::vertex_count)
        .def_property_readonly("edges", &LoopedGraph::edges)
        .def_property_readonly("loops", &LoopedGraph::loops)
        .def("__eq__", [](const LoopedGraph& a, const LoopedGraph& b) { return a == b; })
        .def("__repr__", [](const LoopedGraph& g) { return "Graph(" + dump_graph(g) + ")"; });

    m.def("add_uniform_loops", &add_uniform_loops, py::arg("graph"), py::arg("k"));

    m.def(
        "generic_rank",
        [](const LoopedGraph& g, std::size_t d, std::uint64_t seed, std::size_t n) {
            RandomSource rs(seed);
            return rank_dict(generic_rank(g, d, rs, trials(n)));
        },
        py::arg("graph"), py::arg("d"), py::arg("seed") = 0, py::arg("trials") = 3);
    m.def(
        "is_independent",
        [](const LoopedGraph& g, std::size_t d, std::uint64_t seed) {
            RandomSource rs(seed);
            return is_independent(g, d, rs);
        },
        py::arg("graph"), py::arg("d"), py::arg("seed") = 0);
    m.def(
        "is_rigid",
        [](const LoopedGraph& g, std::size_t d, std::uint64_t seed) {
            RandomSource rs(seed);
            return is_rigid(g, d, rs);
        },
        py::arg("graph"), py::arg("d"), py::arg("seed") = 0);
    m.def(
        "is_pinned_independent",
        [](const LoopedGraph& g, const std::vector<Vertex>& pinned, std::size_t d, std::uint64_t seed) {
            RandomSource rs(seed);
            return is_pinned_independent(g, make_subset(g, pinned), d, rs);
        },
        py::arg("graph"), py::arg("pinned"), py::arg("d"), py::arg("seed") = 0);

    m.def(
        "pebble_game",
        [](const LoopedGraph& g, std::size_t k) {
            const auto v = pebble_game(g, {k});
            py::dict out;
            out["sparse"] = v.is_sparse;
            out["rank"] = *v.matroid_rank;
            out["violation"] = v.violation ? py::cast(*v.violation) : py::none();
            out["basis"] = elements(v.basis);
            return out;
        },
        py::arg("graph"), py::arg("k"));

    m.def(
        "combinatorial_independent",
        [](const LoopedGraph& g, std::size_t d) { return verdict_dict(combinatorial_independent(g, d)); },
        py::arg("graph"), py::arg("d"));
    m.def(
        "combinatorial_rigid", [](const LoopedGraph& g, std::size_t d) { return verdict_dict(combinatorial_rigid(g, d)); },
        py::arg("graph"), py::arg("d"));
    m.def(
        "pinned_sufficiency",
        [](const LoopedGraph& g, const std::vector<Vertex>& pinned, std::size_t d) {
            return pinned_sufficiency(g, make_subset(g, pinned), d);
        },
        py::arg("graph"), py::arg("pinned"), py::arg("d"));

    m.def(
        "find_circuit",
        [](const LoopedGraph& g, std::size_t d, std::uint64_t seed) -> py::object {
            RandomSource rs(seed);
            const auto c = find_circuit(g, d, rs);
            if (!c) return py::none();
            return elements(c->elements);
        },
        py::arg("graph"), py::arg("d"), py::arg("seed") = 0);

    m.def(
        "conjecture_instance_check",
        [](const LoopedGraph& g, std::size_t t, std::size_t d, std::uint64_t seed, bool allow_open_range) {
            RandomSource rs(seed);
            const auto c = conjecture_instance_check(g, t, d, rs, {}, allow_open_range);
            py::dict out;
            out["algebraic"] = c.algebraic;
            out["combinatorial"] = c.combinatorial;
            out["agree"] = c.agree;
            out["tight_spanning"] = c.tight_spanning;
            out["in_proved_range"] = c.in_proved_range;
            out["rank"] = rank_dict(c.rank);
            return out;
        },
        py::arg("graph"), py::arg("t"), py::arg("d"), py::arg("seed") = 0, py::arg("allow_open_range") = false);

    m.def(
        "zero_extension_chain",
        [](std::size_t vertices, std::size_t d, std::uint64_t seed) {
            RandomSource rs(seed);
            return zero_extension_chain(rs, vertices, d);
        },
        py::arg("vertices"), py::arg("d"), py::arg("seed") = 0);
    m.def(
        "one_extension_chain",
        [](std::size_t vertices, std::size_t d, std::uint64_t seed) {
            RandomSource rs(seed);
            return one_extension_chain(rs, vertices, d);
        },
        py::arg("vertices"), py::arg("d"), py::arg("seed") = 0);
}
