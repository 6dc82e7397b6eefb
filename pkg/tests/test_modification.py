import pytest
from hypothesis import given, strategies as st

import oracles as O
from conftest import graphs
from graphlogic.errors import CapExceeded, DeadlineExceeded, InputError, Unsupported
from graphlogic.generators import complete, cycle, gnp, path, star
from graphlogic.graph import Graph, delete_edges, delete_vertices, induced_subgraph
from graphlogic.logic import catalog_formula
from graphlogic.logic.semantics import Structure, evaluate
from graphlogic.modification import (RATIO_BOUNDS, approx_edge_deletion, approx_node_deletion,
                                     approximate_deletion, audit_ratio, disjoint_packing,
                                     exact_edge_deletion, exact_node_deletion,
                                     heuristic_orientation_deletion)
from graphlogic.recognition import enumerate_violations, is_in_class

NODE = ("cograph", "split", "threshold", "comparability", "interval", "permutation")
EDGE = ("cograph", "split", "threshold", "comparability")


def test_micro_instances():
    res = exact_node_deletion(path(4), "cograph")
    assert res.size == 1 and res.solution == (0,) and res.certified
    assert exact_node_deletion(cycle(5), "split").size == 1
    assert exact_edge_deletion(cycle(4), "split").size == 1
    assert exact_node_deletion(cycle(5), "comparability").size == 1


def test_ratio_bounds():
    assert RATIO_BOUNDS == {"cograph": 4, "split": 5, "threshold": 4}


def test_packing_on_p4_deletes_the_pattern():
    res = approx_node_deletion(path(4), "cograph")
    assert res.solution == (0, 1, 2, 3) and res.ratio_bound == 4
    assert res.to_json()["ratioBound"] == 4


def test_packing_is_vertex_disjoint_and_maximal():
    g = gnp(9, 0.5, seed=3)
    viols = list(enumerate_violations(g, "split"))
    kept = disjoint_packing(viols)
    used = [v for k in kept for v in k.hit_vertices]
    assert len(used) == len(set(used))
    assert all(set(v.hit_vertices) & set(used) for v in viols)


def test_edge_rounds_handle_new_patterns():
    # removing the middle P4 edge creates a 2K2; a second round is needed for threshold
    res = approx_edge_deletion(path(4), "threshold")
    assert is_in_class(delete_edges(path(4), res.solution), "threshold")
    assert res.rounds >= 1 and res.ratio_bound is None


def test_heuristic_on_c5_stays_small():
    res = heuristic_orientation_deletion(cycle(5), "comparability")
    assert res.size <= 2 and res.method == "heuristic-conflict"
    res = heuristic_orientation_deletion(cycle(5), "comparability", "edge")
    assert res.size <= 2


def test_unsupported_combinations():
    with pytest.raises(Unsupported):
        approximate_deletion(cycle(4), "interval", "edge")
    with pytest.raises(Unsupported):
        exact_edge_deletion(cycle(4), "permutation")
    with pytest.raises(Unsupported):
        approx_node_deletion(cycle(4), "comparability")
    with pytest.raises(Unsupported):
        heuristic_orientation_deletion(cycle(4), "split")
    with pytest.raises(Unsupported):
        exact_node_deletion(cycle(4), "chordal")
    with pytest.raises(InputError):
        approximate_deletion(cycle(4), "split", "arc")


def test_caps_and_deadlines():
    with pytest.raises(CapExceeded):
        exact_node_deletion(path(17), "cograph")
    with pytest.raises(CapExceeded):
        exact_edge_deletion(path(18), "cograph")
    with pytest.raises(DeadlineExceeded):
        exact_node_deletion(gnp(14, 0.5, 1), "interval", deadline=0.0)


@given(graphs(max_n=6))
def test_exact_node_matches_oracle(g):
    for cls in NODE:
        res = exact_node_deletion(g, cls)
        assert res.size == O.min_node_deletion(g.n, g.sorted_edges(), cls), cls
        assert is_in_class(delete_vertices(g, res.solution), cls)


@given(graphs(max_n=5))
def test_exact_edge_matches_oracle(g):
    for cls in EDGE:
        res = exact_edge_deletion(g, cls)
        assert res.size == O.min_edge_deletion(g.n, g.sorted_edges(), cls), cls


@given(graphs(max_n=7))
def test_exact_solutions_are_lexicographically_least(g):
    from itertools import combinations
    for cls in ("cograph", "split"):
        res = exact_node_deletion(g, cls)
        first = next(c for c in combinations(range(g.n), res.size)
                     if is_in_class(delete_vertices(g, c), cls))
        assert res.solution == first
    for cls in ("threshold",):
        if g.m > 10:
            continue
        res = exact_edge_deletion(g, cls)
        first = next(c for c in combinations(g.sorted_edges(), res.size)
                     if is_in_class(delete_edges(g, c), cls))
        assert res.solution == first


@given(graphs(max_n=8))
def test_approximations_are_certified_and_bounded(g):
    for cls in ("cograph", "split", "threshold"):
        res = approx_node_deletion(g, cls)
        assert res.certified and is_in_class(delete_vertices(g, res.solution), cls)
        opt = exact_node_deletion(g, cls).size
        assert res.size <= RATIO_BOUNDS[cls] * opt
        eres = approx_edge_deletion(g, cls)
        assert is_in_class(delete_edges(g, eres.solution), cls)
    for cls in ("comparability", "interval", "permutation"):
        res = heuristic_orientation_deletion(g, cls)
        assert is_in_class(delete_vertices(g, res.solution), cls)
    res = heuristic_orientation_deletion(g, "comparability", "edge")
    assert is_in_class(delete_edges(g, res.solution), "comparability")


def test_audit_ratio():
    a = audit_ratio(path(7), "cograph", "node")
    assert a.exact >= 1 and a.ratio == a.approx / a.exact
    z = audit_ratio(star(5), "cograph", "node")
    assert (z.approx, z.exact, z.ratio) == (0, 0, 1.0)


def test_json_shape():
    js = exact_edge_deletion(cycle(4), "split").to_json()
    assert js == {"class": "split", "mode": "edge", "method": "exact", "solution": [[0, 1]],
                  "size": 1, "certified": True, "ratioBound": None, "rounds": 0}


def test_results_are_deterministic():
    g = gnp(9, 0.45, seed=11)
    assert approx_node_deletion(g, "split") == approx_node_deletion(g, "split")
    assert exact_edge_deletion(Graph(5, g.sorted_edges()[:0]), "cograph").size == 0


def test_stated_examples():
    assert exact_node_deletion(complete(3), "cograph").solution == ()
    assert exact_edge_deletion(path(4), "cograph").size == 1
    assert exact_edge_deletion(star(4), "threshold").solution == ()
    assert approx_node_deletion(complete(3), "threshold").solution == ()
    p7 = approx_node_deletion(path(7), "cograph")
    assert p7.certified and p7.size <= 4 * exact_node_deletion(path(7), "cograph").size
    assert approx_edge_deletion(path(4), "cograph").size == 3
    c4 = approx_edge_deletion(cycle(4), "split")
    assert c4.solution == ((0, 1), (0, 3), (1, 2), (2, 3)) and c4.certified
    assert approx_edge_deletion(complete(3), "split").solution == ()
    res = heuristic_orientation_deletion(cycle(4), "interval")
    assert res.certified and 1 <= res.size <= 4
    assert heuristic_orientation_deletion(cycle(4), "comparability").solution == ()
    a = audit_ratio(path(4), "cograph", "node")
    assert (a.approx, a.exact, a.ratio) == (4, 1, 4.0)
    a = audit_ratio(complete(3), "cograph", "node")
    assert (a.approx, a.exact, a.ratio) == (0, 0, 1.0)


@given(graphs(max_n=8), st.data())
def test_exact_node_deletion_is_monotone(g, data):
    keep = data.draw(st.lists(st.sampled_from(range(g.n)), unique=True) if g.n else st.just([]))
    sub = induced_subgraph(g, sorted(keep))
    for cls in ("cograph", "split", "threshold", "comparability"):
        assert exact_node_deletion(sub, cls).size <= exact_node_deletion(g, cls).size


@given(graphs(max_n=7))
def test_node_solutions_satisfy_deletion_formulas(g):
    for cls in ("cograph", "split", "threshold"):
        f = catalog_formula(f"{cls}_node_del")
        for res in (approx_node_deletion(g, cls), exact_node_deletion(g, cls)):
            assert evaluate(f, Structure(g, {"S": frozenset(res.solution)}))
