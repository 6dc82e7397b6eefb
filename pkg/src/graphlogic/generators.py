"""Deterministic instance generators."""
from __future__ import annotations

import random

from .errors import InputError
from .graph import Graph, canonical_edge


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star on ``n`` vertices: centre 0 joined to leaves 1..n-1."""
    if n < 1:
        raise InputError("a star needs at least 1 vertex")
    return Graph(n, ((0, i) for i in range(1, n)))


def complete(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty(n: int) -> Graph:
    return Graph(n)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InputError("gnp needs n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def partial_2_tree(n: int, seed: int = 0, keep: float = 0.75):
    """Random subgraph of a random 2-tree, with its width-2 decomposition.

    Returns ``(graph, bags, tree_edges)``; bag ``i`` is a sorted vertex tuple.
    Every 2-tree edge survives with probability ``keep``.
    """
    if n < 1:
        raise InputError("partial-2-tree needs n >= 1")
    rng = random.Random(seed)
    if n <= 3:
        full = [(u, v) for u in range(n) for v in range(u + 1, n)]
        kept = [e for e in full if rng.random() < keep]
        return Graph(n, kept), [tuple(range(n))], []
    bags: list[tuple[int, ...]] = [(0, 1, 2)]
    tree: list[tuple[int, int]] = []
    full = [(0, 1), (0, 2), (1, 2)]
    home = {e: 0 for e in full}  # edge -> a bag containing it
    for v in range(3, n):
        a, b = full[rng.randrange(len(full))]
        bags.append((a, b, v))
        tree.append((home[(a, b)], len(bags) - 1))
        for e in (canonical_edge(a, v), canonical_edge(b, v)):
            full.append(e)
            home[e] = len(bags) - 1
    kept = [e for e in full if rng.random() < keep]
    return Graph(n, kept), bags, tree
