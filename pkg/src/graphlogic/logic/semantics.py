"""Brute-force satisfaction for the formula language.

Vertex quantifiers range over ``0..n-1``, edge quantifiers over the edges of
the graph and set quantifiers over every subset, so set quantification is
exponential; it refuses outright above ``SET_QUANTIFIER_CAP`` elements.

The path-based notions the language cannot express finitely (connectivity,
induced cycles, rainbow paths, transitive orientability) are built-in atoms,
decided here by direct search.
"""
from __future__ import annotations

import operator
import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Mapping

from ..errors import CapExceeded, DeadlineExceeded, InputError
from ..graph import Edge, Graph, canonical_edge
from .syntax import (Adj, And, Builtin, Card, Const, EdgeMember, Eq, Formula,
                     Iff, Implies, Incident, Member, Not, Or, Quant, SetRef,
                     Sort, free_variables)

SET_QUANTIFIER_CAP = 20

_CMP = {"<=": operator.le, "<": operator.lt, "=": operator.eq,
        "!=": operator.ne, ">=": operator.ge, ">": operator.gt}


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class Structure:
    """A graph together with values for a formula's free variables."""
    graph: Graph
    sets: Mapping[str, frozenset] = field(default_factory=dict)
    elements: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        g = self.graph
        sets = {}
        for name, members in self.sets.items():
            vals = frozenset(canonical_edge(*m) if isinstance(m, tuple) else m for m in members)
            for v in vals:
                if isinstance(v, tuple):
                    if v not in g.edges:
                        raise InputError(f"set {name}: {v} is not an edge")
                elif not 0 <= v < g.n:
                    raise InputError(f"set {name}: vertex {v} out of range")
            sets[name] = vals
        object.__setattr__(self, "sets", sets)
        elems = {}
        for name, v in self.elements.items():
            if isinstance(v, tuple):
                v = canonical_edge(*v)
                if v not in g.edges:
                    raise InputError(f"{name}: {v} is not an edge")
            elif not 0 <= v < g.n:
                raise InputError(f"{name}: vertex {v} out of range")
            elems[name] = v
        object.__setattr__(self, "elements", elems)


# -- built-in predicates ---------------------------------------------------------

def induces_connected(g: Graph, vs) -> bool:
    vs = set(vs)
    if len(vs) <= 1:
        return True
    start = next(iter(vs))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in vs and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vs)


def induces_cycle(g: Graph, vs) -> bool:
    vs = set(vs)
    if len(vs) < 3:
        return False
    for v in vs:
        if sum(1 for w in g.adj[v] if w in vs) != 2:
            return False
    return induces_connected(g, vs)


def orientable(n: int, edges) -> bool:
    """Backtracking search for a transitive orientation of ``(range(n), edges)``.

    Arcs are fixed one edge at a time; a partial orientation is abandoned as
    soon as two chosen arcs form a chain ``x->y->z`` that cannot be closed.
    """
    edges = sorted({canonical_edge(u, v) for u, v in edges})
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out = [set() for _ in range(n)]
    inc = [set() for _ in range(n)]

    def consistent(p: int, q: int) -> bool:
        for c in out[q]:  # p->q->c
            if c == p or c not in adj[p] or p in out[c]:
                return False
        for c in inc[p]:  # c->p->q
            if c == q or q not in adj[c] or c in out[q]:
                return False
        for c in out[q]:  # q->c->p would need q->p
            if p in out[c]:
                return False
        return True

    def search(i: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        for p, q in ((u, v), (v, u)):
            if consistent(p, q):
                out[p].add(q)
                inc[q].add(p)
                if search(i + 1):
                    return True
                out[p].discard(q)
                inc[q].discard(p)
        return False

    return search(0)


def rainbow_connected(g: Graph, classes) -> bool:
    """Every vertex pair is joined by a path with pairwise distinct edge colours.

    Edge ``e`` carries colour ``i`` if it lies in ``classes[i]`` (first match);
    uncoloured edges cannot be used. A walk with distinct colours contains a
    path with distinct colours, so a search over (vertex, used colours) states
    suffices.
    """
    colour: dict[Edge, int] = {}
    for i, cls in enumerate(classes):
        for e in cls:
            colour.setdefault(e, i)
    for s in range(g.n):
        reach = {s}
        seen = {(s, 0)}
        queue = deque([(s, 0)])
        while queue:
            u, used = queue.popleft()
            for w in g.adj[u]:
                c = colour.get(canonical_edge(u, w))
                if c is None or used >> c & 1:
                    continue
                st = (w, used | 1 << c)
                if st not in seen:
                    seen.add(st)
                    reach.add(w)
                    queue.append(st)
        if len(reach) < g.n:
            return False
    return True


# -- compilation -----------------------------------------------------------------

Env = dict
Check = Callable[[Env], bool]


class _Compiler:
    def __init__(self, g: Graph, deadline: float | None):
        self.g = g
        self.deadline = deadline
        self.all_vertices = frozenset(range(g.n))
        self.all_edges = frozenset(g.edges)

    def setref(self, a: SetRef) -> Callable[[Env], tuple[Sort, frozenset]]:
        universe = self.all_vertices if a.universe == Sort.VSET else self.all_edges
        kind = a.universe
        if a.name is None:
            return lambda env: (kind, universe)
        name = a.name
        if a.minus:
            return lambda env: (kind, universe - env[name])
        return lambda env: (kind, env[name])

    def subgraph(self, kind: Sort, members: frozenset) -> tuple[int, list]:
        if kind == Sort.VSET:
            return self.g.n, [e for e in self.g.edges if e[0] in members and e[1] in members]
        return self.g.n, list(members)

    def compile(self, node: Formula) -> Check:
        g = self.g
        if isinstance(node, Const):
            value = node.value
            return lambda env: value
        if isinstance(node, Adj):
            x, y, masks = node.x, node.y, g.masks
            return lambda env: (masks[env[x]] >> env[y]) & 1 == 1
        if isinstance(node, Eq):
            x, y = node.x, node.y
            return lambda env: env[x] == env[y]
        if isinstance(node, Member):
            e, s = node.elem, node.set
            return lambda env: env[e] in env[s]
        if isinstance(node, EdgeMember):
            x, y, s = node.x, node.y, node.set

            def edge_member(env):
                a, b = env[x], env[y]
                return (a, b) in env[s] if a < b else (b, a) in env[s]
            return edge_member
        if isinstance(node, Incident):
            v, e = node.vertex, node.edge
            return lambda env: env[v] in env[e]
        if isinstance(node, Card):
            s, other, bound, cmp = node.set, node.other, node.bound, _CMP[node.op]
            if other is None:
                return lambda env: cmp(len(env[s]), bound)
            return lambda env: cmp(len(env[s]), len(env[other]) + bound)
        if isinstance(node, Builtin):
            return self.builtin(node)
        if isinstance(node, Not):
            body = self.compile(node.body)
            return lambda env: not body(env)
        if isinstance(node, And):
            parts = [self.compile(p) for p in node.parts]
            return lambda env: all(p(env) for p in parts)
        if isinstance(node, Or):
            parts = [self.compile(p) for p in node.parts]
            return lambda env: any(p(env) for p in parts)
        if isinstance(node, Implies):
            left, right = self.compile(node.left), self.compile(node.right)
            return lambda env: (not left(env)) or right(env)
        if isinstance(node, Iff):
            left, right = self.compile(node.left), self.compile(node.right)
            return lambda env: left(env) == right(env)
        if isinstance(node, Quant):
            return self.quantifier(node)
        raise TypeError(f"not a formula node: {node!r}")

    def builtin(self, node: Builtin) -> Check:
        g = self.g
        refs = [self.setref(a) for a in node.args]
        if node.name == "connected":
            ref = refs[0]
            return lambda env: induces_connected(g, ref(env)[1])
        if node.name == "cycle":
            ref = refs[0]
            return lambda env: induces_cycle(g, ref(env)[1])
        if node.name in ("comparability", "cocomparability"):
            ref, co = refs[0], node.name == "cocomparability"

            def check(env):
                kind, members = ref(env)
                n, edges = self.subgraph(kind, members)
                if kind == Sort.VSET:
                    keep = sorted(members)
                else:
                    keep = range(n)
                if co:
                    present = set(edges)
                    edges = [(u, v) for i, u in enumerate(keep) for v in keep[i + 1:]
                             if (u, v) not in present]
                return orientable(n, edges)
            return check
        if node.name == "rainbow":
            return lambda env: rainbow_connected(g, [r(env)[1] for r in refs])
        raise TypeError(f"unknown builtin {node.name!r}")  # pragma: no cover

    def quantifier(self, node: Quant) -> Check:
        body = self.compile(node.body)
        var = node.var
        g = self.g
        if node.sort == Sort.VERTEX:
            domain: Callable[[], object] = lambda: range(g.n)
        elif node.sort == Sort.EDGE:
            edges = g.sorted_edges()
            domain = lambda: edges
        else:
            universe = list(range(g.n)) if node.sort == Sort.VSET else list(g.sorted_edges())
            if len(universe) > SET_QUANTIFIER_CAP:
                raise CapExceeded(f"set quantifier over {len(universe)} elements "
                                  f"(cap {SET_QUANTIFIER_CAP})")
            deadline = self.deadline

            def domain():
                for r in range(len(universe) + 1):
                    if deadline is not None and time.monotonic() > deadline:
                        raise DeadlineExceeded("set quantifier search")
                    for combo in combinations(universe, r):
                        yield frozenset(combo)
        want = node.kind == "forall"
        missing = object()

        def quant(env):
            saved = env.get(var, missing)
            try:
                for value in domain():
                    env[var] = value
                    if body(env) != want:
                        return not want
                return want
            finally:
                if saved is missing:
                    env.pop(var, None)
                else:
                    env[var] = saved
        return quant


def compile_formula(f: Formula, g: Graph, deadline: float | None = None) -> Check:
    return _Compiler(g, deadline).compile(f)


def _check_bindings(f: Formula, m: Structure):
    for name, sort in free_variables(f).items():
        if sort.is_set:
            if name not in m.sets:
                raise EvaluationError(f"free set variable {name!r} is not bound")
            want_edges = sort == Sort.ESET
            if any(isinstance(v, tuple) != want_edges for v in m.sets[name]):
                raise EvaluationError(f"{name!r} must be bound to a {sort.value}")
        elif name not in m.elements:
            raise EvaluationError(f"free variable {name!r} is not bound")


def evaluate(f: Formula, m: Structure, deadline: float | None = None) -> bool:
    """Truth value of ``f`` in ``m``; every free variable must be bound."""
    _check_bindings(f, m)
    env = dict(m.elements)
    env.update(m.sets)
    return compile_formula(f, m.graph, deadline)(env)


@dataclass(frozen=True)
class MinSetResult:
    variable: str
    sort: Sort
    members: tuple | None  # None when unsatisfiable
    size: int | None

    @property
    def satisfiable(self) -> bool:
        return self.members is not None


def min_satisfying_set(f: Formula, g: Graph, cap: int = 20,
                       deadline: float | None = None) -> MinSetResult:
    """Smallest binding of the single free set variable that makes ``f`` true.

    Candidates are tried by increasing size, each size in lexicographic order
    of the sorted member tuple, so the first hit is the lexicographically least
    minimum. Refuses when the universe has more than ``cap`` elements.
    """
    free = free_variables(f)
    sets = [(n, s) for n, s in free.items() if s.is_set]
    others = [n for n, s in free.items() if not s.is_set]
    if len(sets) != 1 or others:
        raise EvaluationError("formula must have exactly one free variable, a set")
    name, sort = sets[0]
    universe = list(range(g.n)) if sort == Sort.VSET else list(g.sorted_edges())
    if len(universe) > cap:
        raise CapExceeded(f"{len(universe)} candidate elements exceed cap {cap}")
    check = compile_formula(f, g, deadline)
    env: dict = {}
    for r in range(len(universe) + 1):
        for combo in combinations(universe, r):
            if deadline is not None and time.monotonic() > deadline:
                raise DeadlineExceeded("min_satisfying_set")
            env[name] = frozenset(combo)
            if check(env):
                return MinSetResult(name, sort, combo, r)
    return MinSetResult(name, sort, None, None)
