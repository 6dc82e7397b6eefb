"""Coloring: proper k-coloring by treewidth DP, exotic variants by exhaustive search.

Assignments list colors in a fixed domain order: vertices ``0..n-1`` for
vertex variants, the sorted edge list for edge variants, and vertices then
sorted edges for total coloring.
"""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Callable

from ..errors import CapExceeded, DeadlineExceeded, InputError, Unsupported
from ..graph import Graph, is_connected
from ..logic.catalog import catalog_formula
from ..logic.semantics import Structure, evaluate
from .nice import NiceDecomposition, validate_nice

EXACT_VARIANTS = ("star", "cd", "edge", "rainbow", "total", "equitable")
VARIANTS = ("proper", *EXACT_VARIANTS)
VERTEX_VARIANTS = ("proper", "star", "cd", "equitable")
EDGE_VARIANTS = ("edge", "rainbow")
VERTEX_CAP = 10
EDGE_CAP = 10
FORMULA = {"proper": "proper_vertex_coloring", "star": "star_coloring", "cd": "cd_coloring",
           "edge": "edge_coloring", "rainbow": "rainbow_coloring",
           "total": "total_coloring", "equitable": "equitable_coloring"}


@dataclass(frozen=True)
class ColoringAssignment:
    variant: str
    k: int
    colors: tuple[int, ...]
    certified: bool

    def to_json(self) -> dict:
        return {"variant": self.variant, "k": self.k, "colors": list(self.colors),
                "certified": self.certified}


def domain(g: Graph, variant: str) -> list:
    if variant in VERTEX_VARIANTS:
        return list(range(g.n))
    if variant in EDGE_VARIANTS:
        return list(g.sorted_edges())
    if variant == "total":
        return [*range(g.n), *g.sorted_edges()]
    raise InputError(f"unknown coloring variant {variant!r}")


def color_classes(g: Graph, variant: str, k: int, colors) -> dict[str, frozenset]:
    """Bindings ``C<i>`` / ``F<i>`` for the catalog formula of the variant."""
    sets: dict[str, set] = {}
    for i in range(k):
        if variant != "edge" and variant != "rainbow":
            sets[f"C{i}"] = set()
        if variant in ("edge", "rainbow", "total"):
            sets[f"F{i}"] = set()
    for x, c in zip(domain(g, variant), colors):
        sets[("F" if isinstance(x, tuple) else "C") + str(c)].add(x)
    return {name: frozenset(s) for name, s in sets.items()}


def satisfies(g: Graph, variant: str, k: int, colors) -> bool:
    return evaluate(catalog_formula(FORMULA[variant], k),
                    Structure(g, color_classes(g, variant, k, colors)))


def _certified(g: Graph, variant: str, k: int, colors, certify: bool) -> ColoringAssignment:
    colors = tuple(colors)
    if any(not 0 <= c < k for c in colors) or len(colors) != len(domain(g, variant)):
        raise AssertionError("assignment does not match its domain")
    if certify and not satisfies(g, variant, k, colors):
        raise AssertionError(f"{variant} coloring {colors} fails its defining formula")
    return ColoringAssignment(variant, k, colors, certify)


# -- DP over a nice decomposition ------------------------------------------------------

def solve_coloring_dp(g: Graph, nd: NiceDecomposition, k: int, certify: bool = True,
                      deadline: float | None = None) -> ColoringAssignment | None:
    """Proper k-coloring or None; states are colorings of the current bag."""
    if k < 0:
        raise InputError("k must be non-negative")
    validate_nice(g, nd)
    masks = g.masks
    tables: list[dict | None] = [None] * len(nd.nodes)
    for i, node in enumerate(nd.nodes):
        if deadline is not None and time.monotonic() > deadline:
            raise DeadlineExceeded("coloring DP")
        table: dict = {}
        if node.kind == "leaf":
            table[()] = None
        elif node.kind == "introduce":
            v = node.vertex
            pos = node.bag.index(v)
            nbr = [masks[v] >> u & 1 for u in node.bag if u != v]
            for st, wit in tables[node.children[0]].items():
                banned = {c for c, adj in zip(st, nbr) if adj}
                for c in range(k):
                    if c not in banned:
                        table[st[:pos] + (c,) + st[pos:]] = (v, c, wit)
        elif node.kind == "forget":
            pos = nd.nodes[node.children[0]].bag.index(node.vertex)
            for st, wit in tables[node.children[0]].items():
                table.setdefault(st[:pos] + st[pos + 1:], wit)
        else:
            left, right = (tables[c] for c in node.children)
            for st, wit in left.items():
                if st in right:
                    table[st] = ("j", wit, right[st])
        for c in node.children:
            tables[c] = None
        tables[i] = table
        if not table:
            return None
    if () not in tables[-1]:
        return None
    colors = [0] * g.n
    stack = [tables[-1][()]]
    while stack:
        cell = stack.pop()
        if cell is None:
            continue
        if cell[0] == "j":
            stack += [cell[1], cell[2]]
        else:
            colors[cell[0]] = cell[1]
            stack.append(cell[2])
    return _certified(g, "proper", k, colors, certify)


def chromatic_number_dp(g: Graph, nd: NiceDecomposition, certify: bool = True,
                        deadline: float | None = None) -> ColoringAssignment:
    k = 0 if g.n == 0 else 1
    while True:
        found = solve_coloring_dp(g, nd, k, certify, deadline)
        if found is not None:
            return found
        k += 1


# -- exhaustive search ---------------------------------------------------------------

def _rainbow(g: Graph, edges: list, colors) -> bool:
    colour = dict(zip(edges, colors))
    for s in range(g.n):
        reach = {s}
        seen = {(s, 0)}
        queue = deque(seen)
        while queue:
            u, used = queue.popleft()
            for w in g.adj[u]:
                bit = 1 << colour[(u, w) if u < w else (w, u)]
                if used & bit:
                    continue
                st = (w, used | bit)
                if st not in seen:
                    seen.add(st)
                    reach.add(w)
                    queue.append(st)
        if len(reach) < g.n:
            return False
    return True


def _local_conflicts(g: Graph, variant: str, dom: list) -> list[list[tuple]]:
    """For each domain position, earlier positions that must differ from it,
    and (star only) earlier 4-paths whose two colour pairs must not both repeat."""
    index = {x: i for i, x in enumerate(dom)}
    differ: list[set[int]] = [set() for _ in dom]

    def must_differ(a, b):
        i, j = index[a], index[b]
        differ[max(i, j)].add(min(i, j))

    if variant != "edge" and variant != "rainbow":
        for u, v in g.sorted_edges():
            must_differ(u, v)
    if variant in ("edge", "total"):
        for v in range(g.n):
            inc = [(min(v, w), max(v, w)) for w in g.adj[v]]
            for a in range(len(inc)):
                for b in range(a + 1, len(inc)):
                    must_differ(inc[a], inc[b])
    if variant == "total":
        for u, v in g.sorted_edges():
            must_differ(u, (u, v))
            must_differ(v, (u, v))
    paths: list[list[tuple[int, int, int, int]]] = [[] for _ in dom]
    if variant == "star":
        for x in range(g.n):
            for y in g.adj[x]:
                for z in g.adj[y]:
                    if z == x:
                        continue
                    for w in g.adj[z]:
                        if w != x and w != y and x < w:
                            paths[max(x, y, z, w)].append((x, y, z, w))
    return [(sorted(differ[i]), paths[i]) for i in range(len(dom))]


def _final_check(g: Graph, variant: str, dom: list) -> Callable[[list[int]], bool]:
    n = g.n
    masks = g.masks
    if variant == "cd":
        def ok(colors):
            classes: dict[int, int] = {}
            for v, c in enumerate(colors):
                classes[c] = classes.get(c, 0) | 1 << v
            for cls in classes.values():
                single = cls & (cls - 1) == 0
                if not single and not any(cls & ~masks[u] == 0 for u in range(n)):
                    return False
            return True
        return ok
    if variant == "equitable":
        def ok(colors):
            sizes = [colors.count(c) for c in set(colors)]
            return not sizes or max(sizes) - min(sizes) <= 1
        return ok
    if variant == "rainbow":
        return lambda colors: _rainbow(g, dom, colors)
    return lambda colors: True


def solve_coloring_exact(g: Graph, variant: str, k: int, certify: bool = True,
                         deadline: float | None = None) -> ColoringAssignment | None:
    """Lexicographically least valid assignment with colors ``0..k-1``, or None.

    The search only extends restricted-growth strings (each new color is at
    most one more than the largest so far). Every variant is invariant under
    renaming colors and renaming turns any valid assignment into a smaller
    restricted-growth one, so the first hit is the least overall.
    """
    if variant not in VARIANTS:
        raise InputError(f"unknown coloring variant {variant!r}")
    if k < 0:
        raise InputError("k must be non-negative")
    if variant in (*VERTEX_VARIANTS, "total") and g.n > VERTEX_CAP:
        raise CapExceeded(f"{variant} coloring search handles n <= {VERTEX_CAP}, got {g.n}")
    if variant in (*EDGE_VARIANTS, "total") and g.m > EDGE_CAP:
        raise CapExceeded(f"{variant} coloring search handles m <= {EDGE_CAP}, got {g.m}")
    if variant == "rainbow" and not is_connected(g):
        raise Unsupported("rainbow coloring needs a connected graph")
    dom = domain(g, variant)
    local = _local_conflicts(g, variant, dom)
    final = _final_check(g, variant, dom)
    colors = [0] * len(dom)
    steps = [0]

    def fits(i: int, c: int) -> bool:
        differ, paths = local[i]
        for j in differ:
            if colors[j] == c:
                return False
        if paths:
            colors[i] = c
            for x, y, z, w in paths:
                if colors[x] == colors[z] and colors[y] == colors[w]:
                    return False
        return True

    def search(i: int, used: int) -> bool:
        steps[0] += 1
        if steps[0] % 4096 == 0 and deadline is not None and time.monotonic() > deadline:
            raise DeadlineExceeded("coloring search")
        if i == len(dom):
            return final(colors)
        for c in range(min(used + 1, k)):
            if fits(i, c):
                colors[i] = c
                if search(i + 1, max(used, c + 1)):
                    return True
        return False

    if not search(0, 0):
        return None
    return _certified(g, variant, k, colors, certify)


def min_colors_exact(g: Graph, variant: str, certify: bool = True,
                     deadline: float | None = None) -> ColoringAssignment:
    """Smallest k with a valid assignment, trying k = 1, 2, ... (0 on an empty domain)."""
    k = 0 if not domain(g, variant) else 1
    while True:
        found = solve_coloring_exact(g, variant, k, certify, deadline)
        if found is not None:
            return found
        k += 1
