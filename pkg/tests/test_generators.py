import pytest

from graphlogic.errors import InputError
from graphlogic.generators import complete, cycle, empty, gnp, partial_2_tree, path, star
from graphlogic.graph import Graph
from graphlogic.treewidth import TreeDecomposition, is_valid


def test_basic_families():
    assert path(4) == Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert cycle(4).m == 4 and cycle(4).has_edge(0, 3)
    assert star(4) == Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert complete(4).m == 6
    assert empty(3).m == 0


@pytest.mark.parametrize("call", [lambda: cycle(2), lambda: star(0), lambda: gnp(3, 1.5),
                                  lambda: partial_2_tree(0)])
def test_invalid_parameters(call):
    with pytest.raises(InputError):
        call()


def test_gnp_is_deterministic_per_seed():
    assert gnp(12, 0.4, seed=7) == gnp(12, 0.4, seed=7)
    assert gnp(12, 0.4, seed=7) != gnp(12, 0.4, seed=8)
    assert gnp(6, 0.0).m == 0 and gnp(6, 1.0).m == 15


@pytest.mark.parametrize("n", [1, 2, 3, 4, 10, 60])
def test_partial_2_tree_carries_width_2_decomposition(n):
    g, bags, tree = partial_2_tree(n, seed=3)
    td = TreeDecomposition(n, tuple(bags), tuple(tree))
    assert is_valid(g, td)
    assert td.width <= 2
    assert partial_2_tree(n, seed=3)[0] == g
