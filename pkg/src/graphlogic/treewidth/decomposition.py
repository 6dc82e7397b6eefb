"""Tree decompositions: construction from elimination orders, checking, PACE I/O."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import CapExceeded, GraphParseError, InputError
from ..graph import Graph

STRATEGIES = ("min-degree", "min-fill", "exact-small")
EXACT_CAP = 12


@dataclass(frozen=True)
class TreeDecomposition:
    n: int
    bags: tuple[tuple[int, ...], ...]
    tree: tuple[tuple[int, int], ...]  # edges between bag indices

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(tuple(sorted(set(b))) for b in self.bags))
        object.__setattr__(self, "tree", tuple(sorted((min(a, b), max(a, b)) for a, b in self.tree)))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def neighbours(self) -> list[list[int]]:
        nb: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.tree:
            nb[a].append(b)
            nb[b].append(a)
        return nb


def tree_problems(td: TreeDecomposition) -> list[str]:
    """Violations that do not depend on the graph's edges."""
    out = []
    nb = len(td.bags)
    if nb == 0:
        return ["no bags"]
    for a, b in td.tree:
        if not (0 <= a < nb and 0 <= b < nb) or a == b:
            out.append(f"tree edge ({a},{b}) is invalid")
    if out:
        return out
    if len(set(td.tree)) != nb - 1:
        out.append(f"{nb} bags need exactly {nb - 1} distinct tree edges")
    adj = td.neighbours()
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != nb:
        out.append("bag tree is disconnected")
    holders: dict[int, list[int]] = {}
    for i, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < td.n:
                out.append(f"bag {i} holds unknown vertex {v}")
            holders.setdefault(v, []).append(i)
    for v in range(td.n):
        if v not in holders:
            out.append(f"vertex {v} is in no bag")
    for v, hs in sorted(holders.items()):
        members = set(hs)
        seen = {hs[0]}
        stack = [hs[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w in members and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(members):
            out.append(f"bags holding vertex {v} are not connected")
    return out


def problems(g: Graph, td: TreeDecomposition) -> list[str]:
    """Every reason ``td`` is not a tree decomposition of ``g`` (empty if valid)."""
    if td.n != g.n:
        return [f"decomposition is for {td.n} vertices, graph has {g.n}"]
    out = tree_problems(td)
    covered = set()
    for bag in td.bags:
        for i, u in enumerate(bag):
            for v in bag[i + 1:]:
                covered.add((u, v))
    for e in g.sorted_edges():
        if e not in covered:
            out.append(f"edge {e} is in no bag")
    return out


def is_valid(g: Graph, td: TreeDecomposition) -> bool:
    return not problems(g, td)


def validate(g: Graph, td: TreeDecomposition):
    found = problems(g, td)
    if found:
        raise InputError("invalid tree decomposition: " + "; ".join(found[:3]))


# -- elimination orders --------------------------------------------------------

def _fill_graph(g: Graph) -> list[set[int]]:
    return [set(a) for a in g.adj]


def _eliminate(adj: list[set[int]], v: int):
    nb = adj[v]
    for a in nb:
        adj[a].discard(v)
        adj[a] |= nb - {a}
    adj[v] = set()


def _fill_in(adj: list[set[int]], v: int) -> int:
    nb = sorted(adj[v])
    return sum(1 for i, a in enumerate(nb) for b in nb[i + 1:] if b not in adj[a])


def greedy_order(g: Graph, strategy: str) -> list[int]:
    adj = _fill_graph(g)
    left = set(range(g.n))
    order = []
    while left:
        if strategy == "min-degree":
            v = min(left, key=lambda x: (len(adj[x]), x))
        else:
            v = min(left, key=lambda x: (_fill_in(adj, x), len(adj[x]), x))
        order.append(v)
        _eliminate(adj, v)
        left.discard(v)
    return order


def exact_order(g: Graph) -> list[int]:
    """Minimum-width elimination order by dynamic programming over vertex sets.

    ``Q(S, v)`` is the set of vertices outside ``S + v`` reachable from ``v``
    through ``S``; eliminating ``S`` first and then ``v`` gives ``v`` exactly
    these later neighbours. ``TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)``.
    """
    n = g.n
    if n > EXACT_CAP:
        raise CapExceeded(f"exact-small handles n <= {EXACT_CAP}, got {n}")
    masks = g.masks
    full = (1 << n) - 1

    def q(s: int, v: int) -> int:
        reach = 1 << v
        frontier = reach
        out = 0
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= masks[low.bit_length() - 1]
                f ^= low
            nxt &= ~reach
            reach |= nxt
            out |= nxt & ~s
            frontier = nxt & s
        return out & ~(1 << v)

    INF = n + 1
    tw = [INF] * (1 << n)
    last = [-1] * (1 << n)
    tw[0] = -1
    for s in range(1, full + 1):
        best, arg = INF, -1
        t = s
        while t:
            low = t & -t
            v = low.bit_length() - 1
            rest = s ^ low
            val = max(tw[rest], bin(q(rest, v)).count("1"))
            if val < best:
                best, arg = val, v
            t ^= low
        tw[s], last[s] = best, arg
    order = []
    s = full
    while s:
        v = last[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    return order


def from_elimination_order(g: Graph, order: Iterable[int]) -> TreeDecomposition:
    """Bag of ``v`` is ``v`` plus its later neighbours in the fill graph.

    Its parent is the bag of the first-eliminated of those neighbours; roots
    of separate components are chained together.
    """
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise InputError("elimination order must list every vertex once")
    if g.n == 0:
        return TreeDecomposition(0, ((),), ())
    pos = {v: i for i, v in enumerate(order)}
    adj = _fill_graph(g)
    bags = []
    tree = []
    roots = []
    for i, v in enumerate(order):
        later = adj[v]
        bags.append((v, *sorted(later)))
        if later:
            tree.append((i, min(pos[w] for w in later)))
        else:
            roots.append(i)
        _eliminate(adj, v)
    tree.extend(zip(roots, roots[1:]))
    return TreeDecomposition(g.n, tuple(bags), tuple(tree))


def decompose(g: Graph, strategy: str = "min-fill") -> TreeDecomposition:
    if strategy not in STRATEGIES:
        raise InputError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
    order = exact_order(g) if strategy == "exact-small" else greedy_order(g, strategy)
    td = from_elimination_order(g, order)
    found = problems(g, td)
    if found:
        raise AssertionError(f"{strategy} produced an invalid decomposition: {found}")
    return td


def treewidth(g: Graph) -> int:
    return decompose(g, "exact-small").width


# -- PACE .td format -------------------------------------------------------------

def write_td(td: TreeDecomposition) -> bytes:
    lines = [f"s td {len(td.bags)} {td.width + 1} {td.n}"]
    lines += [" ".join(["b", str(i + 1), *(str(v + 1) for v in bag)]) for i, bag in enumerate(td.bags)]
    lines += [f"{a + 1} {b + 1}" for a, b in td.tree]
    return ("\n".join(lines) + "\n").encode()


def read_td(source: str | bytes) -> TreeDecomposition:
    if isinstance(source, bytes):
        source = source.decode()
    header = None
    bags: dict[int, tuple[int, ...]] = {}
    tree = []
    for lineno, raw in enumerate(source.splitlines(), 1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        try:
            nums = [int(t) for t in toks[2:]] if toks[0] == "s" else \
                [int(t) for t in toks[1:]] if toks[0] == "b" else [int(t) for t in toks]
        except ValueError:
            raise GraphParseError(f"non-integer token in {raw.strip()!r}", lineno) from None
        if toks[0] == "s":
            if header is not None or len(toks) != 5 or toks[1] != "td":
                raise GraphParseError("expected 's td <bags> <width+1> <n>'", lineno)
            header = nums
        elif header is None:
            raise GraphParseError("content before the 's td' line", lineno)
        elif toks[0] == "b":
            if not nums or not 1 <= nums[0] <= header[0] or nums[0] in bags:
                raise GraphParseError("bad or repeated bag id", lineno)
            if any(not 1 <= v <= header[2] for v in nums[1:]):
                raise GraphParseError("bag vertex out of range", lineno)
            bags[nums[0]] = tuple(v - 1 for v in nums[1:])
        else:
            if len(nums) != 2 or any(not 1 <= x <= header[0] for x in nums):
                raise GraphParseError("tree edge must name two bag ids", lineno)
            tree.append((nums[0] - 1, nums[1] - 1))
    if header is None:
        raise GraphParseError("missing 's td' line")
    nb, width1, n = header
    if len(bags) != nb:
        raise GraphParseError(f"header announces {nb} bags, found {len(bags)}")
    td = TreeDecomposition(n, tuple(bags[i] for i in range(1, nb + 1)), tuple(tree))
    if td.width + 1 != width1 and nb:
        raise GraphParseError(f"header width+1 is {width1}, largest bag has {td.width + 1}")
    return td


def load_td(path: str) -> TreeDecomposition:
    with open(path, "rb") as fh:
        return read_td(fh.read())
