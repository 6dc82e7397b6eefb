"""Class membership by forbidden patterns, transitive orientation and cycles.

cograph = P4-free, split = {2K2, C4, C5}-free, threshold = {2K2, C4, P4}-free,
comparability = transitively orientable, interval = C4-free with a
transitively orientable complement, permutation = comparability with a
comparability complement.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator

from .errors import InputError
from .graph import Edge, Graph, canonical_edge, complement


@dataclass(frozen=True)
class ForbiddenPattern:
    name: str
    order: int
    edges: tuple[Edge, ...]
    # positions whose edges the edge-deletion clause asks to hit
    deletable: tuple[Edge, ...]


P4 = ForbiddenPattern("P4", 4, ((0, 1), (1, 2), (2, 3)), ((0, 1), (1, 2), (2, 3)))
TWO_K2 = ForbiddenPattern("2K2", 4, ((0, 2), (1, 3)), ((0, 2), (1, 3)))
C4 = ForbiddenPattern("C4", 4, ((0, 1), (1, 2), (2, 3), (0, 3)), ((0, 1), (1, 2), (2, 3), (0, 3)))
C5 = ForbiddenPattern("C5", 5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)),
                      ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)))

PATTERNS = {p.name: p for p in (P4, TWO_K2, C4, C5)}
PATTERN_CLASSES = {
    "cograph": (P4,),
    "split": (TWO_K2, C4, C5),
    "threshold": (TWO_K2, C4, P4),
}
ORIENTATION_CLASSES = ("comparability", "interval", "permutation")
CLASSES = (*PATTERN_CLASSES, *ORIENTATION_CLASSES, "chordal", "chordal-bipartite")


@dataclass(frozen=True)
class Violation:
    """A concrete reason a graph is outside a class.

    ``kind`` is ``"pattern-embedding"`` (an induced copy of ``pattern`` on ``vertices``,
    listed in the pattern's labelling), ``"transitivity-conflict"`` (a forcing
    chain of arcs in ``chain`` that orients some edge both ways, on the graph or
    on its complement), or ``"induced-cycle"``.
    """
    kind: str
    vertices: tuple[int, ...]
    pattern: ForbiddenPattern | None = None
    hit_vertices: tuple[int, ...] = ()
    hit_edges: tuple[Edge, ...] = ()
    chain: tuple[tuple[int, int], ...] = ()
    on_complement: bool = False

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "pattern": self.pattern.name if self.pattern else None,
            "vertices": list(self.vertices),
            "hitVertices": list(self.hit_vertices),
            "hitEdges": [list(e) for e in self.hit_edges],
        }
        if self.kind == "transitivity-conflict":
            out["chain"] = [list(a) for a in self.chain]
            out["onComplement"] = self.on_complement
        return out


def _pattern_violation(p: ForbiddenPattern, tup: tuple[int, ...]) -> Violation:
    hit = tuple(sorted(canonical_edge(tup[i], tup[j]) for i, j in p.deletable))
    return Violation("pattern-embedding", tup, p, tuple(sorted(tup)), hit)


# For every vertex count k, map the induced-edge signature of a sorted k-set to
# (pattern, least labelling permutation). Bit index of pair (i, j) is fixed by
# the lexicographic enumeration of position pairs.
def _signature_table(patterns: tuple[ForbiddenPattern, ...], k: int) -> dict[int, tuple]:
    pairs = list(combinations(range(k), 2))
    bit = {pr: 1 << i for i, pr in enumerate(pairs)}
    table: dict[int, tuple] = {}
    for p in patterns:
        if p.order != k:
            continue
        for perm in permutations(range(k)):
            # perm[i] is the sorted position playing pattern vertex i
            sig = 0
            for a, b in p.edges:
                sig |= bit[canonical_edge(perm[a], perm[b])]
            table.setdefault(sig, (p, perm))
    return table


_TABLES: dict[str, dict[int, dict[int, tuple]]] = {
    cls: {k: _signature_table(pats, k) for k in {p.order for p in pats}}
    for cls, pats in PATTERN_CLASSES.items()
}
_C4_TABLE = {4: _signature_table((C4,), 4)}
_PAIRS = {k: list(combinations(range(k), 2)) for k in (4, 5)}


def _signature(g: Graph, combo: tuple[int, ...]) -> int:
    masks = g.masks
    sig = 0
    for i, (a, b) in enumerate(_PAIRS[len(combo)]):
        if masks[combo[a]] >> combo[b] & 1:
            sig |= 1 << i
    return sig


def enumerate_violations(g: Graph, cls: str) -> Iterator[Violation]:
    """Every induced forbidden pattern of ``cls`` in ``g``, one per vertex set.

    Violations come in lexicographic order of their sorted vertex tuple; the
    ``vertices`` tuple is the least labelling that realises the pattern.
    """
    if cls not in PATTERN_CLASSES:
        raise InputError(f"{cls!r} is not characterised by a finite pattern set")
    return _violations(g, _TABLES[cls])


def _violations(g: Graph, tables: dict[int, dict[int, tuple]]) -> Iterator[Violation]:
    streams = [combinations(range(g.n), k) for k in sorted(tables)]
    for combo in heapq.merge(*streams):
        hit = tables[len(combo)].get(_signature(g, combo))
        if hit is not None:
            p, perm = hit
            yield _pattern_violation(p, tuple(combo[i] for i in perm))


def first_violation(g: Graph, cls: str) -> Violation | None:
    return next(enumerate_violations(g, cls), None)


# -- orientations ------------------------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    """Directed arcs over the edges of a graph, one direction per edge."""
    arcs: frozenset[tuple[int, int]]

    def __contains__(self, arc) -> bool:
        return arc in self.arcs

    def to_json(self) -> list:
        return [list(a) for a in sorted(self.arcs)]


def _forced(g: Graph, arc: tuple[int, int], alive: set[Edge]) -> Iterator[tuple[int, int]]:
    """Arcs forced by ``arc`` in the graph restricted to edges ``alive``.

    a->b forces a->b' when ab' is alive and bb' is not, and a'->b when a'b
    is alive and aa' is not.
    """
    a, b = arc
    for c in g.adj[a]:
        if c != b and canonical_edge(a, c) in alive and canonical_edge(b, c) not in alive:
            yield (a, c)
    for c in g.adj[b]:
        if c != a and canonical_edge(b, c) in alive and canonical_edge(a, c) not in alive:
            yield (c, b)


def _gamma_path(g: Graph, src, dst, alive) -> list[tuple[int, int]]:
    """Shortest forcing chain from arc ``src`` to arc ``dst``."""
    parent = {src: None}
    queue = deque([src])
    while queue:
        arc = queue.popleft()
        if arc == dst:
            break
        for nxt in _forced(g, arc, alive):
            if nxt not in parent:
                parent[nxt] = arc
                queue.append(nxt)
    chain = []
    arc = dst
    while arc is not None:
        chain.append(arc)
        arc = parent[arc]
    return chain[::-1]


def transitive_orientation(g: Graph) -> Orientation | Violation:
    """Transitive orientation of ``g`` or a forcing-conflict witness.

    Implication classes are peeled off one at a time: orient the least
    remaining edge low->high, propagate the forcing relation within the
    remaining edges, and remove the class. A class containing both directions
    of an edge certifies that no transitive orientation exists; the witness is
    the shortest forcing chain from one direction to the other.
    """
    alive = set(g.edges)
    arcs: set[tuple[int, int]] = set()
    while alive:
        start = min(alive)
        cls = {start}
        queue = deque([start])
        while queue:
            arc = queue.popleft()
            rev = (arc[1], arc[0])
            if rev in cls:
                chain = _gamma_path(g, arc, rev, alive)
                return _conflict(chain, on_complement=False)
            for nxt in _forced(g, arc, alive):
                if nxt not in cls:
                    cls.add(nxt)
                    queue.append(nxt)
        for arc in cls:
            if (arc[1], arc[0]) in cls:
                return _conflict(_gamma_path(g, arc, (arc[1], arc[0]), alive), False)
        arcs |= cls
        alive -= {canonical_edge(*a) for a in cls}
    return Orientation(frozenset(arcs))


def _conflict(chain: list[tuple[int, int]], on_complement: bool) -> Violation:
    seen: list[int] = []
    for a in chain:
        for v in a:
            if v not in seen:
                seen.append(v)
    edges = tuple(sorted({canonical_edge(*a) for a in chain}))
    return Violation("transitivity-conflict", tuple(seen), None, tuple(sorted(seen)),
                     edges, tuple(chain), on_complement)


def verify_orientation_transitive(g: Graph, o: Orientation) -> tuple[bool, tuple[int, int, int] | None]:
    """Check ``o`` orients exactly ``g``'s edges and is transitive.

    Returns ``(True, None)`` or ``(False, (x, y, z))`` with the
    lexicographically least x->y->z whose closing arc x->z is missing.
    """
    seen = set()
    for a, b in o.arcs:
        e = canonical_edge(a, b)
        if a == b or e not in g.edges:
            raise InputError(f"arc {a}->{b} is not on an edge")
        if e in seen:
            raise InputError(f"edge {e} oriented both ways")
        seen.add(e)
    if len(seen) != g.m:
        raise InputError("orientation leaves edges unoriented")
    out = [[] for _ in range(g.n)]
    for a, b in o.arcs:
        out[a].append(b)
    for x in range(g.n):
        for y in sorted(out[x]):
            for z in sorted(out[y]):
                if (x, z) not in o.arcs:
                    return False, (x, y, z)
    return True, None


# -- chordal classes -------------------------------------------------------------

def _shortest_path(g: Graph, src: int, dst: int, banned: set[int]) -> list[int] | None:
    parent = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = []
            while u is not None:
                path.append(u)
                u = parent[u]
            return path[::-1]
        for w in g.adj[u]:
            if w not in parent and w not in banned:
                parent[w] = u
                queue.append(w)
    return None


def long_induced_cycle(g: Graph, min_length: int) -> tuple[int, ...] | None:
    """An induced cycle with at least ``min_length`` (4 or 5) vertices, if any.

    Every such cycle contains an induced path a-b-...; for ``min_length`` 4
    we anchor on a P3 a-b-c and close it through a shortest a..c path avoiding
    the rest of N[b], for larger lengths on an induced P4 a-b-c-d closed
    through a path avoiding N[b] and N[c]. Shortest paths are induced, so the
    closed cycle has no chords.
    """
    best = None
    if min_length <= 4:
        for b in range(g.n):
            for a, c in combinations(g.adj[b], 2):
                if g.has_edge(a, c):
                    continue
                banned = (set(g.adj[b]) | {b}) - {a, c}
                path = _shortest_path(g, a, c, banned)
                if path is not None:
                    cyc = (b, *path)
                    if best is None or len(cyc) < len(best):
                        best = cyc
        return best
    for b in range(g.n):
        for c in g.adj[b]:
            for a in g.adj[b]:
                if a == c or g.has_edge(a, c):
                    continue
                for d in g.adj[c]:
                    if d in (a, b) or g.has_edge(d, b) or g.has_edge(d, a):
                        continue
                    banned = (set(g.adj[b]) | set(g.adj[c]) | {b, c}) - {a, d}
                    path = _shortest_path(g, d, a, banned)
                    if path is not None and len(path) + 2 >= min_length:
                        cyc = (b, c, *path)
                        if best is None or len(cyc) < len(best):
                            best = cyc
    return best


def _maximum_cardinality_order(g: Graph) -> list[int]:
    weight = [0] * g.n
    done = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not done[u]), key=lambda u: (weight[u], -u))
        done[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not done[w]:
                weight[w] += 1
    return order


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search, then check the reverse is a perfect elimination order."""
    order = _maximum_cardinality_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.adj[v] if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        for u in earlier:
            if u != parent and not g.has_edge(u, parent):
                return False
    return True


def odd_induced_cycle(g: Graph) -> tuple[int, ...] | None:
    """A shortest odd cycle (hence induced), or None when ``g`` is bipartite."""
    best = None
    for root in range(g.n):
        level = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in level:
                    level[w] = level[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif level[w] == level[u] and u < w:
                    left, right = [u], [w]
                    while left[-1] != right[-1]:
                        left.append(parent[left[-1]])
                        right.append(parent[right[-1]])
                    if left[-1] != root:
                        continue
                    cyc = tuple(left + right[-2::-1])
                    if best is None or len(cyc) < len(best):
                        best = cyc
    return best


# -- membership ------------------------------------------------------------------

@dataclass(frozen=True)
class Membership:
    member: bool
    witness: Violation | None = field(default=None)

    def __bool__(self) -> bool:
        return self.member


def _cycle_violation(cyc: tuple[int, ...]) -> Violation:
    edges = tuple(sorted(canonical_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))))
    return Violation("induced-cycle", cyc, None, tuple(sorted(cyc)), edges)


def is_comparability(g: Graph) -> Membership:
    res = transitive_orientation(g)
    if isinstance(res, Violation):
        return Membership(False, res)
    return Membership(True)


def _co_comparability(g: Graph) -> Membership:
    res = transitive_orientation(complement(g))
    if isinstance(res, Violation):
        return Membership(False, _conflict(list(res.chain), on_complement=True))
    return Membership(True)


def is_in_class(g: Graph, cls: str) -> Membership:
    if cls in PATTERN_CLASSES:
        v = first_violation(g, cls)
        return Membership(v is None, v)
    if cls == "comparability":
        return is_comparability(g)
    if cls == "interval":
        c4 = next(_violations(g, _C4_TABLE), None)
        if c4 is not None:
            return Membership(False, c4)
        return _co_comparability(g)
    if cls == "permutation":
        res = is_comparability(g)
        return res if not res.member else _co_comparability(g)
    if cls == "chordal":
        if is_chordal(g):
            return Membership(True)
        return Membership(False, _cycle_violation(long_induced_cycle(g, 4)))
    if cls == "chordal-bipartite":
        odd = odd_induced_cycle(g)
        if odd is not None:
            return Membership(False, _cycle_violation(odd))
        cyc = long_induced_cycle(g, 5)
        return Membership(cyc is None, _cycle_violation(cyc) if cyc else None)
    raise InputError(f"unknown graph class {cls!r}")
