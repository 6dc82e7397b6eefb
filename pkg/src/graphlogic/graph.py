"""Simple undirected graphs on dense 0-based vertex ids, plus file I/O.

Two on-disk formats are supported:

* ``edge-list``: header ``p <n> <m>`` then ``m`` lines ``<u> <v>`` (0-based).
* ``dimacs``: header ``p edge <n> <m>`` then ``e <u> <v>`` lines (1-based).

Lines starting with ``#`` are comments in both formats; DIMACS ``c`` lines are
comments too.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import GraphParseError, InputError

Edge = tuple[int, int]

FORMATS = ("edge-list", "dimacs")


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    ``edges`` is a frozenset of canonical ``(min, max)`` pairs; ``adj[v]`` is
    the sorted neighbour tuple of ``v`` and ``masks[v]`` the same set as a
    bitmask, which the search routines lean on heavily.
    """

    __slots__ = ("n", "edges", "adj", "masks", "_sorted_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"negative vertex count {n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            canon.add(canonical_edge(u, v))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "masks", tuple(masks))
        object.__setattr__(self, "_sorted_edges", tuple(sorted(canon)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> tuple[Edge, ...]:
        return self._sorted_edges

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self._sorted_edges)})"


def vertex_set(vs: Iterable[int], n: int) -> tuple[int, ...]:
    """Canonical sorted vertex tuple, validated against ``n``."""
    out = tuple(sorted(set(vs)))
    for v in out:
        if not 0 <= v < n:
            raise InputError(f"vertex {v} out of range for n={n}")
    return out


def edge_set(es: Iterable[tuple[int, int]]) -> tuple[Edge, ...]:
    return tuple(sorted({canonical_edge(u, v) for u, v in es}))


def complement(g: Graph) -> Graph:
    return Graph(g.n, ((u, v) for u in range(g.n) for v in range(u + 1, g.n)
                       if not g.has_edge(u, v)))


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced by ``vs``, relabelled by sorted rank."""
    keep = vertex_set(vs, g.n)
    rank = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), ((rank[u], rank[v]) for u, v in g.edges
                             if u in rank and v in rank))


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    drop = set(vertex_set(vs, g.n))
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def delete_edges(g: Graph, es: Iterable[tuple[int, int]]) -> Graph:
    drop = set()
    for u, v in es:
        e = canonical_edge(u, v)
        if e not in g.edges:
            raise InputError(f"({u}, {v}) is not an edge")
        drop.add(e)
    return Graph(g.n, g.edges - drop)


def components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components (sorted lists) of ``g`` or of ``g[within]``."""
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# -- I/O ---------------------------------------------------------------------

def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {tok!r}", lineno) from None


def read_graph(source: str | bytes | Iterable[str], format: str = "edge-list") -> Graph:
    """Parse a graph from text (or an iterable of lines)."""
    if format not in FORMATS:
        raise InputError(f"unknown graph format {format!r}")
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    lines = source.splitlines() if isinstance(source, str) else list(source)
    dimacs = format == "dimacs"

    n = m = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#") or (dimacs and line.startswith("c")):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate header", lineno)
            if dimacs:
                if len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise GraphParseError("expected 'p edge <n> <m>'", lineno)
                parts = parts[1:]
            if len(parts) != 3:
                raise GraphParseError("expected 'p <n> <m>'", lineno)
            n, m = _int(parts[1], lineno), _int(parts[2], lineno)
            if n < 0 or m < 0:
                raise GraphParseError("negative header value", lineno)
            continue
        if n is None:
            raise GraphParseError("edge line before header", lineno)
        if dimacs:
            if parts[0] != "e" or len(parts) != 3:
                raise GraphParseError("expected 'e <u> <v>'", lineno)
            u, v = _int(parts[1], lineno) - 1, _int(parts[2], lineno) - 1
        else:
            if len(parts) != 2:
                raise GraphParseError("expected '<u> <v>'", lineno)
            u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if u == v:
            raise GraphParseError(f"self-loop on vertex {parts[-1]}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex id out of range for n={n}", lineno)
        edges.add(canonical_edge(u, v))
    if n is None:
        raise GraphParseError("missing header")
    return Graph(n, edges)


def iter_graph_lines(g: Graph, format: str = "edge-list") -> Iterator[str]:
    if format == "dimacs":
        yield f"p edge {g.n} {g.m}"
        for u, v in g.sorted_edges():
            yield f"e {u + 1} {v + 1}"
    elif format == "edge-list":
        yield f"p {g.n} {g.m}"
        for u, v in g.sorted_edges():
            yield f"{u} {v}"
    else:
        raise InputError(f"unknown graph format {format!r}")


def write_graph(g: Graph, format: str = "edge-list") -> bytes:
    return "".join(line + "\n" for line in iter_graph_lines(g, format)).encode()


def load_graph(path: str, format: str = "edge-list") -> Graph:
    with open(path, encoding="utf-8") as fh:
        return read_graph(fh.read(), format)
