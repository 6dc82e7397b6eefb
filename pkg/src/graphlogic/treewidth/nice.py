"""Nice tree decompositions: leaf, introduce, forget and join nodes."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..errors import InputError
from ..graph import Graph
from .decomposition import TreeDecomposition, problems, tree_problems

KINDS = ("leaf", "introduce", "forget", "join")


@dataclass(frozen=True)
class NiceNode:
    kind: str
    bag: tuple[int, ...]
    vertex: int | None = None  # for introduce / forget
    children: tuple[int, ...] = ()


@dataclass(frozen=True)
class NiceDecomposition:
    """Nodes are stored children-first; the last node is the root."""
    n: int
    nodes: tuple[NiceNode, ...]

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    @property
    def width(self) -> int:
        return max((len(x.bag) for x in self.nodes), default=0) - 1

    def as_tree_decomposition(self) -> TreeDecomposition:
        tree = [(i, c) for i, x in enumerate(self.nodes) for c in x.children]
        return TreeDecomposition(self.n, tuple(x.bag for x in self.nodes), tuple(tree))


def nice_problems(g: Graph, nd: NiceDecomposition) -> list[str]:
    out = []
    if not nd.nodes:
        return ["no nodes"]
    if nd.nodes[-1].bag:
        out.append("root bag is not empty")
    parents = [0] * len(nd.nodes)
    for i, x in enumerate(nd.nodes):
        for c in x.children:
            if not 0 <= c < i:
                out.append(f"node {i} has child {c} out of order")
                continue
            parents[c] += 1
        bag = set(x.bag)
        kids = [set(nd.nodes[c].bag) for c in x.children if 0 <= c < i]
        if x.kind == "leaf":
            ok = not x.children and not bag
        elif x.kind == "introduce":
            ok = len(kids) == 1 and x.vertex in bag and kids[0] == bag - {x.vertex}
        elif x.kind == "forget":
            ok = len(kids) == 1 and x.vertex not in bag and kids[0] == bag | {x.vertex} \
                and x.vertex in kids[0]
        elif x.kind == "join":
            ok = len(kids) == 2 and kids[0] == bag and kids[1] == bag
        else:
            ok = False
        if not ok:
            out.append(f"node {i} is not a well-formed {x.kind} node")
    if any(p != 1 for p in parents[:-1]) or parents[-1] != 0:
        out.append("nodes do not form a single rooted tree")
    if out:
        return out
    return problems(g, nd.as_tree_decomposition())


def validate_nice(g: Graph, nd: NiceDecomposition):
    found = nice_problems(g, nd)
    if found:
        raise InputError("invalid nice decomposition: " + "; ".join(found[:3]))


def make_nice(td: TreeDecomposition) -> NiceDecomposition:
    """Nice decomposition rooted at bag 0 with the same width.

    Each original bag becomes the top of a chain: children are first walked
    to the parent's bag (forgets before introduces, so no bag grows past the
    larger of the two), then merged pairwise with join nodes. A leaf starts
    every childless bag and the root forgets everything.
    """
    found = tree_problems(td)
    if found:
        raise InputError("invalid tree decomposition: " + "; ".join(found[:3]))
    nodes: list[NiceNode] = []

    def add(node: NiceNode) -> int:
        nodes.append(node)
        return len(nodes) - 1

    def walk(top: int, target: tuple[int, ...]) -> int:
        bag = set(nodes[top].bag)
        goal = set(target)
        for v in sorted(bag - goal):
            bag.discard(v)
            top = add(NiceNode("forget", tuple(sorted(bag)), v, (top,)))
        for v in sorted(goal - bag):
            bag.add(v)
            top = add(NiceNode("introduce", tuple(sorted(bag)), v, (top,)))
        return top

    adj = td.neighbours()
    parent = {0: -1}
    order = []
    queue = deque([0])
    while queue:
        b = queue.popleft()
        order.append(b)
        for c in sorted(adj[b]):
            if c not in parent:
                parent[c] = b
                queue.append(c)
    children: dict[int, list[int]] = {b: [] for b in order}
    for b in order[1:]:
        children[parent[b]].append(b)

    top_of: dict[int, int] = {}
    for b in reversed(order):
        bag = td.bags[b]
        kids = [walk(top_of.pop(c), bag) for c in children[b]]
        if not kids:
            kids = [walk(add(NiceNode("leaf", ())), bag)]
        cur = kids[0]
        for other in kids[1:]:
            cur = add(NiceNode("join", bag, None, (cur, other)))
        top_of[b] = cur
    walk(top_of[0], ())
    return NiceDecomposition(td.n, tuple(nodes))
