"""Node and edge deletion towards hereditary graph classes.

Three methods:

* ``exact``: minimum deletion set by search, lexicographically least among
  the minimum ones. Node deletion on pattern classes enumerates vertex
  subsets by increasing size and tests whether they hit every forbidden
  embedding; edge deletion on pattern classes branches on the edges of a
  remaining violation; orientation classes test each candidate residual.
* ``approx-packing``: keep a maximal family of vertex-disjoint violations
  and delete their union. Every optimum must hit each kept violation in a
  distinct vertex, so the result is at most ``t`` times optimal where ``t``
  is the largest pattern order.
* ``heuristic-conflict``: for orientation-defined classes, repeatedly
  delete one element of the current recogniser witness. No ratio is claimed.

Every returned result has been re-checked by the recogniser.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceeded, DeadlineExceeded, InputError, Unsupported
from .graph import Edge, Graph, delete_edges, delete_vertices
from .recognition import (ORIENTATION_CLASSES, PATTERN_CLASSES, Violation,
                          enumerate_violations, first_violation, is_in_class)

DEFAULT_NODE_CAP = 16
DEFAULT_EDGE_CAP = 16
NODE_CLASSES = (*PATTERN_CLASSES, *ORIENTATION_CLASSES)
EDGE_CLASSES = (*PATTERN_CLASSES, "comparability")
RATIO_BOUNDS = {cls: max(p.order for p in pats) for cls, pats in PATTERN_CLASSES.items()}


@dataclass(frozen=True)
class DeletionResult:
    cls: str
    mode: str  # "node" | "edge"
    method: str  # "exact" | "approx-packing" | "heuristic-conflict"
    solution: tuple  # sorted vertices or sorted edges
    rounds: int
    certified: bool
    ratio_bound: int | None

    @property
    def size(self) -> int:
        return len(self.solution)

    def to_json(self) -> dict:
        return {
            "class": self.cls,
            "mode": self.mode,
            "method": self.method,
            "solution": [list(e) if isinstance(e, tuple) else e for e in self.solution],
            "size": self.size,
            "certified": self.certified,
            "ratioBound": self.ratio_bound,
            "rounds": self.rounds,
        }


def residual(g: Graph, mode: str, solution) -> Graph:
    return delete_vertices(g, solution) if mode == "node" else delete_edges(g, solution)


def _certify(g: Graph, cls: str, mode: str, method: str, solution, rounds: int,
             ratio_bound: int | None) -> DeletionResult:
    solution = tuple(sorted(solution))
    if not is_in_class(residual(g, mode, solution), cls):
        raise AssertionError(f"{method} {mode} deletion for {cls} left a graph outside the class")
    return DeletionResult(cls, mode, method, solution, rounds, True, ratio_bound)


def _check_mode(cls: str, mode: str):
    if mode == "node":
        if cls not in NODE_CLASSES:
            raise Unsupported(f"no node deletion for class {cls!r}")
    elif mode == "edge":
        if cls not in EDGE_CLASSES:
            raise Unsupported(f"edge deletion towards {cls!r} is not supported")
    else:
        raise InputError(f"unknown mode {mode!r}")


def _tick(deadline: float | None):
    if deadline is not None and time.monotonic() > deadline:
        raise DeadlineExceeded("exact deletion search")


# -- exact -------------------------------------------------------------------------

def exact_node_deletion(g: Graph, cls: str, cap: int = DEFAULT_NODE_CAP,
                        deadline: float | None = None) -> DeletionResult:
    _check_mode(cls, "node")
    if g.n > cap:
        raise CapExceeded(f"exact node deletion needs n <= {cap}, got {g.n}")
    if cls in PATTERN_CLASSES:
        # hereditary: G - S is in the class iff S meets every embedding in G
        masks = sorted({sum(1 << v for v in viol.hit_vertices)
                        for viol in enumerate_violations(g, cls)})

        def ok(combo) -> bool:
            s = 0
            for v in combo:
                s |= 1 << v
            return all(m & s for m in masks)
    else:
        def ok(combo) -> bool:
            return bool(is_in_class(delete_vertices(g, combo), cls))

    for r in range(g.n + 1):
        for i, combo in enumerate(combinations(range(g.n), r)):
            if i % 256 == 0:
                _tick(deadline)
            if ok(combo):
                return _certify(g, cls, "node", "exact", combo, 0, None)
    raise AssertionError("deleting every vertex always succeeds")  # pragma: no cover


def exact_edge_deletion(g: Graph, cls: str, cap: int = DEFAULT_EDGE_CAP,
                        deadline: float | None = None) -> DeletionResult:
    _check_mode(cls, "edge")
    if g.m > cap:
        raise CapExceeded(f"exact edge deletion needs m <= {cap}, got {g.m}")
    if cls in PATTERN_CLASSES:
        best = _branch_edges(g, cls, deadline)
    else:
        best = None
        edges = g.sorted_edges()
        for r in range(g.m + 1):
            for i, combo in enumerate(combinations(edges, r)):
                if i % 64 == 0:
                    _tick(deadline)
                if is_in_class(delete_edges(g, combo), cls):
                    best = combo
                    break
            if best is not None:
                break
    return _certify(g, cls, "edge", "exact", best, 0, None)


def _branch_edges(g: Graph, cls: str, deadline: float | None) -> tuple[Edge, ...]:
    """Least minimum edge deletion set for a pattern class.

    Deleting edges never creates an edge, so an induced pattern survives
    until one of its own edges is deleted. Branching on the edges of the first
    remaining violation with budget ``k`` reaches every deletion set of size
    ``k`` that works; we collect them all at the first feasible ``k``.
    """
    found: set[tuple[Edge, ...]] = set()

    def search(h: Graph, chosen: frozenset, budget: int):
        _tick(deadline)
        viol = first_violation(h, cls)
        if viol is None:
            found.add(tuple(sorted(chosen)))
            return
        if budget == 0:
            return
        for e in viol.hit_edges:
            search(delete_edges(h, [e]), chosen | {e}, budget - 1)

    for k in range(g.m + 1):
        search(g, frozenset(), k)
        if found:
            return min(s for s in found if len(s) == min(map(len, found)))
    raise AssertionError("deleting every edge always succeeds")  # pragma: no cover


def exact_deletion(g: Graph, cls: str, mode: str, cap: int | None = None,
                   deadline: float | None = None) -> DeletionResult:
    if mode == "node":
        return exact_node_deletion(g, cls, cap or DEFAULT_NODE_CAP, deadline)
    return exact_edge_deletion(g, cls, cap or DEFAULT_EDGE_CAP, deadline)


# -- packing approximation -----------------------------------------------------------

def disjoint_packing(violations) -> list[Violation]:
    """Greedy maximal family of vertex-disjoint violations, in stream order."""
    used: set[int] = set()
    kept = []
    for viol in violations:
        if used.isdisjoint(viol.hit_vertices):
            kept.append(viol)
            used.update(viol.hit_vertices)
    return kept


def approx_node_deletion(g: Graph, cls: str) -> DeletionResult:
    if cls not in PATTERN_CLASSES:
        raise Unsupported(f"no packing approximation for {cls!r}")
    kept = disjoint_packing(enumerate_violations(g, cls))
    solution = {v for viol in kept for v in viol.hit_vertices}
    return _certify(g, cls, "node", "approx-packing", solution, 1, RATIO_BOUNDS[cls])


def approx_edge_deletion(g: Graph, cls: str) -> DeletionResult:
    """Packing rounds until the residual graph is in the class.

    Each round deletes the pattern edges of a maximal disjoint packing of the
    current violations. Deletions may create new embeddings (a P4 minus its
    middle edge is a 2K2), hence the rounds; each round deletes at least one
    edge, so the loop terminates. No ratio is claimed for the result.
    """
    if cls not in PATTERN_CLASSES:
        raise Unsupported(f"no packing approximation for {cls!r}")
    h = g
    deleted: set[Edge] = set()
    rounds = 0
    while first_violation(h, cls) is not None:
        rounds += 1
        kept = disjoint_packing(enumerate_violations(h, cls))
        batch = {e for viol in kept for e in viol.hit_edges}
        deleted |= batch
        h = delete_edges(h, batch)
    return _certify(g, cls, "edge", "approx-packing", deleted, rounds, None)


# -- conflict heuristic for orientation classes ----------------------------------------

def _most_frequent(items) -> object:
    counts = Counter(items)
    return min(counts, key=lambda x: (-counts[x], x))


def heuristic_orientation_deletion(g: Graph, cls: str, mode: str = "node") -> DeletionResult:
    """Delete one witness element per round until the recogniser accepts.

    Node mode removes the vertex occurring most often in the witness (a C4
    embedding or forcing-conflict chain); edge mode, for comparability only,
    removes the edge occurring most often in the conflict chain. Ties go to
    the least id.
    """
    if cls not in ORIENTATION_CLASSES:
        raise Unsupported(f"{cls!r} is not an orientation-defined class")
    _check_mode(cls, mode)
    alive = list(range(g.n))  # current vertex i is original alive[i]
    h = g
    deleted = []
    rounds = 0
    while True:
        res = is_in_class(h, cls)
        if res.member:
            break
        rounds += 1
        w = res.witness
        if mode == "node":
            if w.kind == "transitivity-conflict":
                v = _most_frequent([x for arc in w.chain for x in arc])
            else:
                v = _most_frequent(w.hit_vertices)
            deleted.append(alive.pop(v))
            h = delete_vertices(h, [v])
        else:
            e = _most_frequent([tuple(sorted(arc)) for arc in w.chain])
            deleted.append(e)
            h = delete_edges(h, [e])
    return _certify(g, cls, mode, "heuristic-conflict", deleted, rounds, None)


def approximate_deletion(g: Graph, cls: str, mode: str) -> DeletionResult:
    """Packing approximation for pattern classes, conflict heuristic otherwise."""
    _check_mode(cls, mode)
    if cls in PATTERN_CLASSES:
        return approx_node_deletion(g, cls) if mode == "node" else approx_edge_deletion(g, cls)
    return heuristic_orientation_deletion(g, cls, mode)


@dataclass(frozen=True)
class RatioAudit:
    approx: int
    exact: int
    ratio: float

    def to_json(self) -> dict:
        return {"approx": self.approx, "exact": self.exact, "ratio": self.ratio}


def audit_ratio(g: Graph, cls: str, mode: str, cap: int | None = None,
                deadline: float | None = None) -> RatioAudit:
    a = approximate_deletion(g, cls, mode).size
    e = exact_deletion(g, cls, mode, cap, deadline).size
    if e == 0:
        ratio = 1.0 if a == 0 else float("inf")
    else:
        ratio = a / e
    return RatioAudit(a, e, ratio)
