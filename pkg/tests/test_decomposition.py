import pytest
from hypothesis import given

import oracles as O
from conftest import graphs
from graphlogic.errors import CapExceeded, GraphParseError, InputError
from graphlogic.generators import complete, cycle, gnp, path
from graphlogic.graph import Graph
from graphlogic.treewidth import (STRATEGIES, TreeDecomposition, decompose, is_valid, make_nice,
                                  nice_problems, problems, read_td, validate, write_td)
from graphlogic.treewidth.nice import NiceDecomposition, NiceNode


@pytest.mark.parametrize("g, width", [(path(5), 1), (cycle(5), 2), (complete(4), 3), (Graph(3), 0)])
def test_known_widths(g, width):
    assert decompose(g, "exact-small").width == width
    for s in STRATEGIES:
        assert decompose(g, s).width >= width


def test_complete_graph_any_strategy():
    for s in STRATEGIES:
        assert decompose(complete(4), s).width == 3


def test_empty_graph():
    td = decompose(Graph(0))
    assert td.bags == ((),) and td.width == -1


def test_exact_cap_and_unknown_strategy():
    with pytest.raises(CapExceeded):
        decompose(path(13), "exact-small")
    with pytest.raises(InputError):
        decompose(path(3), "best")


@given(graphs(max_n=7))
def test_every_strategy_is_valid(g):
    exact = decompose(g, "exact-small").width
    for s in STRATEGIES:
        td = decompose(g, s)
        assert O.is_tree_decomposition(g.n, g.sorted_edges(), td.bags, td.tree)
        assert td.width >= exact


@given(graphs(max_n=6))
def test_exact_width_matches_permutation_search(g):
    assert decompose(g, "exact-small").width == O.treewidth_bruteforce(g.n, g.sorted_edges())


def test_checker_finds_each_defect():
    g = path(3)
    good = TreeDecomposition(3, ((0, 1), (1, 2)), ((0, 1),))
    assert is_valid(g, good)
    assert any("vertex 2" in p for p in problems(g, TreeDecomposition(3, ((0, 1),), ())))
    assert any("edge" in p for p in problems(g, TreeDecomposition(3, ((0, 1), (2,)), ((0, 1),))))
    split = TreeDecomposition(3, ((0, 1), (2, 1), (0,)), ((0, 2), (1, 2)))
    assert any("vertex 1" in p for p in problems(g, split))
    assert problems(g, TreeDecomposition(3, ((0, 1), (1, 2)), ()))
    with pytest.raises(InputError):
        validate(g, TreeDecomposition(4, ((0, 1), (1, 2)), ((0, 1),)))


@given(graphs(max_n=8))
def test_pace_roundtrip(g):
    td = decompose(g, "min-degree")
    assert read_td(write_td(td)) == td


def test_pace_format_is_one_based():
    td = TreeDecomposition(3, ((0, 1), (1, 2)), ((0, 1),))
    assert write_td(td) == b"s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n"
    assert read_td("c comment\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n") == td


@pytest.mark.parametrize("text", [
    "b 1 1\n",
    "s td 1 2 3\nb 1 1 9\n",
    "s td 2 2 3\nb 1 1 2\n",
    "s td 1 5 3\nb 1 1 2\n",
    "s td 1 2 3\nb 1 x\n",
    "s td 1 2 3\nb 1 1 2\n1 7\n",
])
def test_pace_errors(text):
    with pytest.raises(GraphParseError):
        read_td(text)


# -- nice decompositions ----------------------------------------------------------------

def test_single_bag_k3_chain():
    nd = make_nice(TreeDecomposition(3, ((0, 1, 2),), ()))
    assert [x.kind for x in nd.nodes] == ["leaf"] + ["introduce"] * 3 + ["forget"] * 3
    assert nd.width == 2 and nd.nodes[-1].bag == ()


@given(graphs(max_n=9))
def test_make_nice_preserves_width_and_validity(g):
    for s in ("min-fill", "min-degree"):
        td = decompose(g, s)
        nd = make_nice(td)
        assert nd.width == td.width
        assert not nice_problems(g, nd)
        assert len(nd.nodes) <= 4 * max(1, g.n) * (td.width + 2)
        refined = [set(x.bag) for x in nd.nodes]
        assert all(any(b <= set(t) for t in td.bags) for b in refined)


def test_width_preserved_on_100_random_graphs():
    for seed in range(100):
        g = gnp(6 + seed % 9, 0.3, seed)
        td = decompose(g, "min-fill")
        assert make_nice(td).width == td.width


def test_make_nice_rejects_invalid_tree():
    with pytest.raises(InputError):
        make_nice(TreeDecomposition(2, ((0,), (1,)), ()))


def test_nice_checker_rejects_malformed_nodes():
    g = path(2)
    bad = NiceDecomposition(2, (NiceNode("leaf", ()), NiceNode("introduce", (0, 1), 0, (0,))))
    assert nice_problems(g, bad)
    good = make_nice(decompose(g))
    assert not nice_problems(g, good)
    assert nice_problems(path(3), good)
