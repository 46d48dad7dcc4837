import pytest

import rigidbar

TRIANGLE = [(0, 1), (0, 2), (1, 2)]


def complete(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def test_triangle_with_loops_is_rigid_both_ways():
    g = rigidbar.Graph(3, TRIANGLE, [0, 1, 2])
    assert rigidbar.generic_rank(g, 2)["rank"] == 6
    assert rigidbar.is_rigid(g, 2)
    assert rigidbar.is_independent(g, 2)
    assert rigidbar.combinatorial_rigid(g, 2)["verdict"]
    assert len(rigidbar.combinatorial_rigid(g, 2)["basis"]) == 6


def test_complete_graph_on_d_plus_two_vertices():
    k4 = rigidbar.Graph(4, complete(4))
    assert rigidbar.generic_rank(k4, 2, seed=5)["rank"] == 5
    assert len(rigidbar.find_circuit(k4, 2)) == 6
    assert rigidbar.combinatorial_independent(rigidbar.add_uniform_loops(k4, 1), 2)["violation"]


def test_pebble_game():
    v = rigidbar.pebble_game(rigidbar.Graph(1, [], [0, 0, 0]), 2)
    assert not v["sparse"]
    assert v["violation"] == [0]
    assert v["rank"] == 2


def test_conjecture_check_and_range():
    k5 = rigidbar.Graph(5, complete(5))
    c = rigidbar.conjecture_instance_check(k5, 2, 3)
    assert c["tight_spanning"] and not c["combinatorial"] and not c["algebraic"] and c["agree"]
    with pytest.raises(ValueError):
        rigidbar.conjecture_instance_check(k5, 2, 2)


def test_pinned():
    path = rigidbar.Graph(3, [(0, 1), (1, 2)])
    assert not rigidbar.pinned_sufficiency(path, [0, 2], 2)
    assert rigidbar.is_pinned_independent(path, [0, 2], 2)


def test_json_round_trip_and_errors():
    g = rigidbar.zero_extension_chain(6, 2, seed=1)
    assert rigidbar.Graph.from_json(g.to_json()) == g
    assert len(g.edges) + len(g.loops) == 12
    with pytest.raises(ValueError):
        rigidbar.Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        rigidbar.Graph.from_json("{}")
