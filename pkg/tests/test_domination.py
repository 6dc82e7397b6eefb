import pytest
from hypothesis import given

import oracles as O
from conftest import graphs
from graphlogic.errors import CapExceeded, InputError, Unsupported
from graphlogic.generators import cycle, partial_2_tree, path, star
from graphlogic.graph import Graph, is_connected
from graphlogic.treewidth import (TreeDecomposition, decompose, make_nice, solve_domination_dp,
                                  solve_domination_exact)
from graphlogic.treewidth.domination import DP_VARIANTS, EXACT_VARIANTS, satisfies


def nice(g, strategy="exact-small"):
    return make_nice(decompose(g, strategy))


def test_dp_micro_instances():
    assert solve_domination_dp(star(5), nice(star(5)), "dom").set == (0,)
    assert solve_domination_dp(path(4), nice(path(4)), "total_dom").set == (1, 2)
    assert solve_domination_dp(cycle(6), nice(cycle(6)), "connected_dom").size == 4


@pytest.mark.parametrize("variant, g, size", [
    ("perfect_dom", cycle(4), 2),
    ("clique_dom", path(4), 2),
    ("cycle_dom", path(3), None),
    ("connected_dom", cycle(6), 4),
    ("dom", star(4), 1),
    ("total_outer_connected_dom", path(4), 3),
])
def test_exact_micro_instances(variant, g, size):
    res = solve_domination_exact(g, variant)
    assert res.size == size
    assert res.feasible == (size is not None)
    if size is not None:
        assert res.certified and satisfies(g, variant, res.set)


def test_perfect_dom_on_c4_is_least():
    assert solve_domination_exact(cycle(4), "perfect_dom").set == (0, 1)


def test_infeasible_json():
    res = solve_domination_exact(path(3), "cycle_dom")
    assert res.to_json() == {"variant": "cycle_dom", "infeasible": True}


def test_connected_dom_on_disconnected_graph_is_infeasible():
    g = Graph(4, [(0, 1), (2, 3)])
    assert not solve_domination_dp(g, nice(g), "connected_dom").feasible
    assert not solve_domination_exact(g, "connected_dom").feasible


def test_errors():
    with pytest.raises(Unsupported):
        solve_domination_dp(path(3), nice(path(3)), "perfect_dom")
    with pytest.raises(InputError):
        solve_domination_dp(path(4), nice(path(3)), "dom")
    with pytest.raises(InputError):
        solve_domination_exact(path(3), "weird_dom")
    with pytest.raises(CapExceeded):
        solve_domination_exact(path(21), "dom")


@given(graphs(max_n=8))
def test_dp_matches_oracle(g):
    nd = nice(g)
    for variant in DP_VARIANTS:
        res = solve_domination_dp(g, nd, variant)
        want = O.min_domination(g.n, g.sorted_edges(), variant)
        if variant == "connected_dom" and not is_connected(g):
            want = None
        assert res.size == want, variant
        if res.feasible:
            assert O.dominates(g.n, g.sorted_edges(), variant, res.set)


@given(graphs(max_n=7))
def test_exact_matches_oracle(g):
    for variant in EXACT_VARIANTS:
        res = solve_domination_exact(g, variant)
        assert res.size == O.min_domination(g.n, g.sorted_edges(), variant), variant


@given(graphs(max_n=8))
def test_dp_independent_of_decomposition(g):
    for variant in DP_VARIANTS:
        a = solve_domination_dp(g, nice(g, "min-degree"), variant).size
        b = solve_domination_dp(g, nice(g, "min-fill"), variant).size
        assert a == b


def test_dp_on_supplied_partial_2_tree():
    g, bags, tree = partial_2_tree(60, seed=5)
    nd = make_nice(TreeDecomposition(60, tuple(bags), tuple(tree)))
    res = solve_domination_dp(g, nd, "dom")
    assert res.certified and satisfies(g, "dom", res.set)
    assert res.size == solve_domination_dp(g, nice(g, "min-fill"), "dom").size
