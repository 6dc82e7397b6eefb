"""Minimum dominating sets: treewidth DP for three variants, exhaustive search for all."""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from ..errors import CapExceeded, DeadlineExceeded, InputError, Unsupported
from ..graph import Graph, is_connected
from ..logic.catalog import catalog_formula
from ..logic.semantics import Structure, evaluate
from .nice import NiceDecomposition, validate_nice

DP_VARIANTS = ("dom", "total_dom", "connected_dom")
EXACT_VARIANTS = ("dom", "total_dom", "connected_dom", "total_outer_connected_dom",
                  "cycle_dom", "perfect_dom", "clique_dom")
EXACT_CAP = 20


@dataclass(frozen=True)
class DominationResult:
    variant: str
    set: tuple[int, ...] | None  # None when no set qualifies
    certified: bool

    @property
    def feasible(self) -> bool:
        return self.set is not None

    @property
    def size(self) -> int | None:
        return None if self.set is None else len(self.set)

    def to_json(self) -> dict:
        if self.set is None:
            return {"variant": self.variant, "infeasible": True}
        return {"variant": self.variant, "set": list(self.set), "size": self.size,
                "certified": self.certified}


def satisfies(g: Graph, variant: str, s) -> bool:
    """Evaluate the variant's catalog formula with ``S`` bound to ``s``."""
    return evaluate(catalog_formula(variant), Structure(g, {"S": frozenset(s)}))


def _certified(g: Graph, variant: str, s, certify: bool) -> DominationResult:
    s = tuple(sorted(s))
    if certify and not satisfies(g, variant, s):
        raise AssertionError(f"{variant} solution {s} fails its defining formula")
    return DominationResult(variant, s, certify)


# -- dynamic programming ------------------------------------------------------------
#
# A state assigns each bag vertex (in sorted bag order) a status
#   bit 1: in the solution      bit 0: dominated by a processed neighbour (or itself)
# For plain domination a solution vertex counts as dominated. Connected domination
# adds a block label per solution vertex (blocks = components of the processed
# part that meet the bag) and a flag saying a finished component was already closed.
# Values are (cost, witness) with witness a tree of ("v", vertex, rest) and
# ("j", left, right) cells so that sharing keeps table updates cheap.

IN, DOM = 2, 1


def _flatten(w) -> set[int]:
    out = set()
    stack = [w]
    while stack:
        cell = stack.pop()
        if cell is None:
            continue
        if cell[0] == "v":
            out.add(cell[1])
            stack.append(cell[2])
        else:
            stack.append(cell[1])
            stack.append(cell[2])
    return out


def _relabel(labels: tuple) -> tuple:
    seen: dict[int, int] = {}
    return tuple(None if x is None else seen.setdefault(x, len(seen)) for x in labels)


def _put(table: dict, key, cost: int, wit):
    old = table.get(key)
    if old is None or cost < old[0]:
        table[key] = (cost, wit)


def solve_domination_dp(g: Graph, nd: NiceDecomposition, variant: str = "dom",
                        certify: bool = True, deadline: float | None = None) -> DominationResult:
    if variant not in DP_VARIANTS:
        raise Unsupported(f"no DP for {variant!r}; choose from {', '.join(DP_VARIANTS)}")
    validate_nice(g, nd)
    connected = variant == "connected_dom"
    if connected and not is_connected(g):
        return DominationResult(variant, None, False)
    self_dom = variant != "total_dom"
    masks = g.masks
    tables: list[dict | None] = [None] * len(nd.nodes)
    for i, node in enumerate(nd.nodes):
        if deadline is not None and time.monotonic() > deadline:
            raise DeadlineExceeded("domination DP")
        table: dict = {}
        if node.kind == "leaf":
            table[((), (), False)] = (0, None)
        elif node.kind == "introduce":
            child = tables[node.children[0]]
            tables[node.children[0]] = None
            v = node.vertex
            pos = node.bag.index(v)
            nbr = [masks[v] >> u & 1 for u in node.bag]
            for (st, lab, closed), (cost, wit) in child.items():
                st = list(st[:pos]) + [0] + list(st[pos:])
                lab = list(lab[:pos]) + [None] + list(lab[pos:])
                hit = any(st[j] & IN and nbr[j] for j in range(len(st)))
                # v out of the solution
                s0 = list(st)
                s0[pos] = DOM if hit else 0
                _put(table, (tuple(s0), tuple(lab), closed), cost, wit)
                # v in the solution
                if closed:
                    continue
                s1 = [x | DOM if nbr[j] else x for j, x in enumerate(st)]
                s1[pos] = IN | (DOM if hit or self_dom else 0)
                l1 = list(lab)
                if connected:
                    joined = {lab[j] for j in range(len(st)) if st[j] & IN and nbr[j]}
                    fresh = max((x for x in lab if x is not None), default=-1) + 1
                    l1 = [fresh if x is not None and x in joined else x for x in lab]
                    l1[pos] = fresh
                    l1 = list(_relabel(tuple(l1)))
                _put(table, (tuple(s1), tuple(l1), closed), cost + 1, ("v", v, wit))
        elif node.kind == "forget":
            child = tables[node.children[0]]
            tables[node.children[0]] = None
            cbag = nd.nodes[node.children[0]].bag
            pos = cbag.index(node.vertex)
            for (st, lab, closed), val in child.items():
                if not st[pos] & DOM:
                    continue
                rest_st = st[:pos] + st[pos + 1:]
                rest_lab = lab[:pos] + lab[pos + 1:]
                if connected and st[pos] & IN and lab[pos] not in rest_lab:
                    if any(x is not None for x in rest_lab):
                        continue  # this component can no longer reach the others
                    closed = True
                _put(table, (rest_st, _relabel(rest_lab), closed), *val)
        else:  # join
            left = tables[node.children[0]]
            right = tables[node.children[1]]
            tables[node.children[0]] = tables[node.children[1]] = None
            by_in: dict[tuple, list] = {}
            for key, val in right.items():
                by_in.setdefault(tuple(x & IN for x in key[0]), []).append((key, val))
            for (st, lab, closed), (cost, wit) in left.items():
                ins = tuple(x & IN for x in st)
                shared = sum(1 for x in ins if x)
                for (st2, lab2, closed2), (cost2, wit2) in by_in.get(ins, ()):
                    if closed and closed2:
                        continue
                    merged = tuple(a | b for a, b in zip(st, st2))
                    lab3 = _merge_partitions(lab, lab2) if connected else lab
                    _put(table, (merged, lab3, closed or closed2), cost + cost2 - shared,
                         ("j", wit, wit2))
        tables[i] = table
    root = tables[-1]
    want = connected and g.n > 0
    best = root.get(((), (), want))
    if best is None:
        return DominationResult(variant, None, False)
    return _certified(g, variant, _flatten(best[1]), certify)


def _merge_partitions(a: tuple, b: tuple) -> tuple:
    """Finest partition coarser than both block labellings (same members)."""
    parent = list(range(len(a)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for labels in (a, b):
        first: dict[int, int] = {}
        for j, x in enumerate(labels):
            if x is None:
                continue
            if x in first:
                parent[find(j)] = find(first[x])
            else:
                first[x] = j
    return _relabel(tuple(None if a[j] is None else find(j) for j in range(len(a))))


# -- exhaustive search ---------------------------------------------------------------

def _connected_mask(masks, s: int) -> bool:
    if s == 0:
        return True
    seen = s & -s
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        nxt &= s & ~seen
        seen |= nxt
        frontier = nxt
    return seen == s


def _predicate(g: Graph, variant: str):
    n = g.n
    masks = g.masks
    full = (1 << n) - 1
    closed = [masks[v] | 1 << v for v in range(n)]

    def dom(s):
        return all(closed[v] & s for v in range(n))

    def total(s):
        return all(masks[v] & s for v in range(n))

    def cycle(s):
        if bin(s).count("1") < 3:
            return False
        t = s
        while t:
            low = t & -t
            if bin(masks[low.bit_length() - 1] & s).count("1") != 2:
                return False
            t ^= low
        return _connected_mask(masks, s)

    def perfect(s):
        return all(s >> v & 1 or bin(masks[v] & s).count("1") == 1 for v in range(n))

    def clique(s):
        t = s
        while t:
            low = t & -t
            if (s & ~low) & ~masks[low.bit_length() - 1]:
                return False
            t ^= low
        return True

    return {
        "dom": dom,
        "total_dom": total,
        "connected_dom": lambda s: dom(s) and _connected_mask(masks, s),
        "total_outer_connected_dom": lambda s: total(s) and _connected_mask(masks, full & ~s),
        "cycle_dom": lambda s: dom(s) and cycle(s),
        "perfect_dom": perfect,
        "clique_dom": lambda s: dom(s) and clique(s),
    }[variant]


def solve_domination_exact(g: Graph, variant: str, cap: int = EXACT_CAP,
                           certify: bool = True, deadline: float | None = None) -> DominationResult:
    """Least minimum set by increasing size, lexicographic within a size."""
    if variant not in EXACT_VARIANTS:
        raise InputError(f"unknown domination variant {variant!r}")
    if g.n > cap:
        raise CapExceeded(f"exhaustive domination handles n <= {cap}, got {g.n}")
    ok = _predicate(g, variant)
    for r in range(g.n + 1):
        for i, combo in enumerate(combinations(range(g.n), r)):
            if i % 1024 == 0 and deadline is not None and time.monotonic() > deadline:
                raise DeadlineExceeded("exhaustive domination")
            if ok(sum(1 << v for v in combo)):
                return _certified(g, variant, combo, certify)
    return DominationResult(variant, None, False)
