"""Slow, definition-level reference implementations used only by the tests.

None of these import the package's algorithms; they work on plain adjacency
sets so that agreement with the library is meaningful.
"""
from __future__ import annotations

from itertools import combinations, permutations, product


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def complement_edges(n, edges):
    es = {tuple(sorted(e)) for e in edges}
    return [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in es]


def induced(n, edges, keep):
    keep = sorted(keep)
    idx = {v: i for i, v in enumerate(keep)}
    return len(keep), [(idx[u], idx[v]) for u, v in edges if u in idx and v in idx]


# -- forbidden patterns ------------------------------------------------------------

PATTERN_EDGES = {
    "P4": (4, {(0, 1), (1, 2), (2, 3)}),
    "2K2": (4, {(0, 1), (2, 3)}),
    "C4": (4, {(0, 1), (1, 2), (2, 3), (0, 3)}),
    "C5": (5, {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}),
}
CLASS_PATTERNS = {"cograph": ("P4",), "split": ("2K2", "C4", "C5"),
                  "threshold": ("2K2", "C4", "P4")}


def contains_induced(n, edges, pattern):
    k, pe = PATTERN_EDGES[pattern]
    adj = adjacency(n, edges)
    for perm in permutations(range(n), k):
        if all((perm[j] in adj[perm[i]]) == ((i, j) in pe or (j, i) in pe)
               for i in range(k) for j in range(i + 1, k)):
            return True
    return False


def pattern_free(n, edges, cls):
    return not any(contains_induced(n, edges, p) for p in CLASS_PATTERNS[cls])


# -- definitional class tests --------------------------------------------------------

def components(n, edges, within=None):
    adj = adjacency(n, edges)
    left = set(range(n) if within is None else within)
    out = []
    while left:
        s = min(left)
        comp = {s}
        stack = [s]
        while stack:
            for w in adj[stack.pop()]:
                if w in left and w not in comp:
                    comp.add(w)
                    stack.append(w)
        left -= comp
        out.append(comp)
    return out


def is_cograph_recursive(n, edges):
    """Complement-reducible: split along components of G or of its complement."""
    if n <= 1:
        return True
    comps = components(n, edges)
    if len(comps) == 1:
        comps = components(n, complement_edges(n, edges))
        if len(comps) == 1:
            return False
    return all(is_cograph_recursive(*induced(n, edges, c)) for c in comps)


def is_split_partition(n, edges):
    adj = adjacency(n, edges)
    for r in range(n + 1):
        for k in combinations(range(n), r):
            ks = set(k)
            rest = [v for v in range(n) if v not in ks]
            if all(b in adj[a] for a, b in combinations(k, 2)) and \
                    not any(b in adj[a] for a, b in combinations(rest, 2)):
                return True
    return False


def is_threshold_peeling(n, edges):
    alive = set(range(n))
    adj = adjacency(n, edges)
    while alive:
        for v in sorted(alive):
            d = len(adj[v] & alive)
            if d == 0 or d == len(alive) - 1:
                alive.discard(v)
                break
        else:
            return False
    return True


def transitively_orientable(n, edges):
    """Backtracking over edge directions with a final full transitivity check."""
    edges = sorted(tuple(sorted(e)) for e in edges)
    adj = adjacency(n, edges)
    arcs = set()

    def closed_so_far():
        for a, b in arcs:
            for c in adj[b]:
                if (b, c) in arcs and c != a:
                    if c not in adj[a] or (c, a) in arcs:
                        return False
        return True

    def go(i):
        if i == len(edges):
            return all((a, c) in arcs for a, b in arcs for c in adj[b] if (b, c) in arcs and c != a)
        u, v = edges[i]
        for arc in ((u, v), (v, u)):
            arcs.add(arc)
            if closed_so_far() and go(i + 1):
                arcs.discard(arc)
                return True
            arcs.discard(arc)
        return False

    return go(0)


def is_transitive_orientation(n, edges, arcs):
    arcs = set(arcs)
    es = {tuple(sorted(e)) for e in edges}
    if {tuple(sorted(a)) for a in arcs} != es or len(arcs) != len(es):
        return False
    out = [set() for _ in range(n)]
    for a, b in arcs:
        out[a].add(b)
    return all(c in out[a] for a in range(n) for b in out[a] for c in out[b])


def has_interval_model(n, edges):
    """Search over endpoint sequences: a vertex opens, stays open, then closes.

    Two vertices are adjacent exactly when their open periods overlap. The
    state (opened, closed) determines the future, so memoise on it.
    """
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    full = (1 << n) - 1
    seen = set()

    def go(opened, closed):
        if closed == full:
            return True
        if (opened, closed) in seen:
            return False
        seen.add((opened, closed))
        active = opened & ~closed
        for v in range(n):
            bit = 1 << v
            if not opened & bit:
                if active & ~adj[v] == 0 and closed & adj[v] == 0 and go(opened | bit, closed):
                    return True
            elif active & bit:
                if adj[v] & ~opened == 0 and go(opened, closed | bit):
                    return True
        return False

    return go(0, 0)


def induces_cycle(adj, vs):
    vs = set(vs)
    if len(vs) < 3 or any(len(adj[v] & vs) != 2 for v in vs):
        return False
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()] & vs:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def longest_induced_cycle_at_least(n, edges, length):
    adj = adjacency(n, edges)
    return any(induces_cycle(adj, c) for r in range(length, n + 1) for c in combinations(range(n), r))


def is_bipartite_bruteforce(n, edges):
    return any(all(side[u] != side[v] for u, v in edges) for side in product((0, 1), repeat=n))


def in_class(n, edges, cls):
    if cls in CLASS_PATTERNS:
        return pattern_free(n, edges, cls)
    if cls == "comparability":
        return transitively_orientable(n, edges)
    if cls == "permutation":
        return transitively_orientable(n, edges) and transitively_orientable(n, complement_edges(n, edges))
    if cls == "interval":
        return has_interval_model(n, edges)
    if cls == "chordal":
        return not longest_induced_cycle_at_least(n, edges, 4)
    if cls == "chordal-bipartite":
        return is_bipartite_bruteforce(n, edges) and not longest_induced_cycle_at_least(n, edges, 6)
    raise KeyError(cls)


# -- deletion ------------------------------------------------------------------------

def min_node_deletion(n, edges, cls):
    for r in range(n + 1):
        for s in combinations(range(n), r):
            if in_class(*induced(n, edges, set(range(n)) - set(s)), cls):
                return r
    raise AssertionError


def min_edge_deletion(n, edges, cls):
    edges = sorted(tuple(sorted(e)) for e in edges)
    for r in range(len(edges) + 1):
        for s in combinations(edges, r):
            if in_class(n, [e for e in edges if e not in s], cls):
                return r
    raise AssertionError


# -- domination -------------------------------------------------------------------------

def _connected_set(adj, s):
    s = set(s)
    if len(s) <= 1:
        return True
    start = min(s)
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()] & s:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == s


def dominates(n, edges, variant, s):
    adj = adjacency(n, edges)
    s = set(s)
    rest = set(range(n)) - s
    dom = all(v in s or adj[v] & s for v in range(n))
    total = all(adj[v] & s for v in range(n))
    if variant == "dom":
        return dom
    if variant == "total_dom":
        return total
    if variant == "connected_dom":
        return dom and _connected_set(adj, s)
    if variant == "total_outer_connected_dom":
        return total and _connected_set(adj, rest)
    if variant == "cycle_dom":
        return dom and induces_cycle(adj, s)
    if variant == "perfect_dom":
        return all(len(adj[v] & s) == 1 for v in rest)
    if variant == "clique_dom":
        return dom and all(b in adj[a] for a, b in combinations(sorted(s), 2))
    raise KeyError(variant)


def min_domination(n, edges, variant):
    for r in range(n + 1):
        for s in combinations(range(n), r):
            if dominates(n, edges, variant, s):
                return r
    return None


# -- coloring ---------------------------------------------------------------------------

def coloring_domain(n, edges, variant):
    es = sorted(tuple(sorted(e)) for e in edges)
    if variant in ("edge", "rainbow"):
        return es
    if variant == "total":
        return list(range(n)) + es
    return list(range(n))


def rainbow_ok(n, edges, colour):
    """Every pair joined by some vertex-simple path with distinct edge colours."""
    adj = adjacency(n, edges)

    def paths_from(s, t, seen, used):
        if s == t:
            return True
        for w in adj[s]:
            c = colour[tuple(sorted((s, w)))]
            if w not in seen and c not in used:
                if paths_from(w, t, seen | {w}, used | {c}):
                    return True
        return False

    return all(paths_from(s, t, {s}, frozenset()) for s, t in combinations(range(n), 2))


def valid_coloring(n, edges, variant, colors):
    dom = coloring_domain(n, edges, variant)
    col = dict(zip(dom, colors))
    adj = adjacency(n, edges)
    es = [e for e in dom if isinstance(e, tuple)]
    proper = all(col[u] != col[v] for u, v in edges) if variant not in ("edge", "rainbow") else True
    edge_proper = all(col[a] != col[b] for a, b in combinations(es, 2) if set(a) & set(b))
    if variant == "proper":
        return proper
    if variant == "star":
        if not proper:
            return False
        for x in range(n):
            for y in adj[x]:
                for z in adj[y] - {x}:
                    for w in adj[z] - {x, y}:
                        if len({col[x], col[y], col[z], col[w]}) < 3:
                            return False
        return True
    if variant == "cd":
        if not proper:
            return False
        for c in set(colors):
            members = {v for v in range(n) if col[v] == c}
            if len(members) > 1 and not any(members <= adj[u] for u in range(n)):
                return False
        return True
    if variant == "edge":
        return edge_proper
    if variant == "rainbow":
        return rainbow_ok(n, edges, col)
    if variant == "total":
        return proper and edge_proper and all(col[e] != col[e[0]] and col[e] != col[e[1]] for e in es)
    if variant == "equitable":
        sizes = [list(colors).count(c) for c in set(colors)]
        return proper and (not sizes or max(sizes) - min(sizes) <= 1)
    raise KeyError(variant)


def min_colors(n, edges, variant, limit=None):
    """Least k admitting a valid assignment; plain product enumeration."""
    size = len(coloring_domain(n, edges, variant))
    k = 0 if size == 0 else 1
    while limit is None or k <= limit:
        if any(valid_coloring(n, edges, variant, cs) for cs in product(range(k), repeat=size)):
            return k
        k += 1
    return None


def chromatic_number(n, edges):
    """Backtracking with the first uncoloured vertex tried on every used color plus one new."""
    adj = adjacency(n, edges)
    if n == 0:
        return 0
    best = [n]
    col = [-1] * n

    def go(v, used):
        if used >= best[0]:
            return
        if v == n:
            best[0] = used
            return
        for c in range(used + 1):
            if all(col[w] != c for w in adj[v]):
                col[v] = c
                go(v + 1, max(used, c + 1))
                col[v] = -1

    go(0, 0)
    return best[0]


# -- tree decompositions ------------------------------------------------------------------

def is_tree_decomposition(n, edges, bags, tree):
    nb = len(bags)
    if nb == 0 or len(tree) != nb - 1:
        return False
    if set().union(*map(set, bags)) != set(range(n)):
        return False
    if not all(any(u in b and v in b for b in bags) for u, v in edges):
        return False
    tadj = adjacency(nb, tree)
    if len(components(nb, tree)) != 1:
        return False
    for v in range(n):
        holders = [i for i, b in enumerate(bags) if v in b]
        comp = components(nb, tree, within=holders)
        if len(comp) != 1:
            return False
    del tadj
    return True


def elimination_width(n, edges, order):
    adj = adjacency(n, edges)
    width = -1
    for v in order:
        nb = adj[v]
        width = max(width, len(nb))
        for a in nb:
            adj[a] |= nb - {a}
            adj[a].discard(v)
        adj[v] = set()
    return width


def treewidth_bruteforce(n, edges):
    if n == 0:
        return -1
    return min(elimination_width(n, edges, p) for p in permutations(range(n)))
