"""Command-line interface.

Exit codes: 0 success or true, 1 negative answer, 2 usage/parse/unsupported,
3 infeasible, 4 size cap or deadline exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import statistics
import sys
import time
from collections import Counter

from . import __version__, generators
from .errors import CapExceeded, DeadlineExceeded
from .graph import FORMATS, Graph, is_connected, load_graph, write_graph
from .logic import (COLORING_NAMES, Sort, Structure, catalog_formula, evaluate,
                    free_variables, parse_formula)
from .modification import (EDGE_CLASSES, NODE_CLASSES, RATIO_BOUNDS, approximate_deletion,
                           exact_deletion)
from .recognition import CLASSES, is_in_class, transitive_orientation
from .treewidth import (STRATEGIES, TreeDecomposition, chromatic_number_dp, decompose,
                        load_td, make_nice, min_colors_exact, solve_coloring_dp,
                        solve_coloring_exact, solve_domination_dp, solve_domination_exact,
                        validate, write_td)
from .treewidth.coloring import EXACT_VARIANTS as COLORING_VARIANTS
from .treewidth.domination import DP_VARIANTS, EXACT_VARIANTS as DOMINATION_VARIANTS

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_CAP = 0, 1, 2, 3, 4
DEADLINE_ENV = "GRAPHLOGIC_DEADLINE_SECS"
SOLVE_VARIANTS = (*DOMINATION_VARIANTS, "coloring", *COLORING_VARIANTS)


class UsageError(ValueError):
    pass


def _emit(args, payload: dict):
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")


def _deadline(args) -> float | None:
    secs = args.deadline
    if secs is None and os.environ.get(DEADLINE_ENV):
        try:
            secs = float(os.environ[DEADLINE_ENV])
        except ValueError:
            raise UsageError(f"{DEADLINE_ENV} must be a number of seconds") from None
    if secs is None:
        return None
    if secs <= 0:
        raise UsageError("deadline must be positive")
    return time.monotonic() + secs


def _graph(args) -> Graph:
    return load_graph(args.graph, args.format)


# -- recognize -------------------------------------------------------------------

def cmd_recognize(args) -> int:
    g = _graph(args)
    res = is_in_class(g, args.cls)
    payload = {"class": args.cls, "member": res.member}
    if res.witness is not None:
        payload["witness"] = res.witness.to_json()
    if res.member and args.cls == "comparability":
        payload["orientation"] = transitive_orientation(g).to_json()
    _emit(args, payload)
    return EXIT_OK if res.member else EXIT_NO


# -- delete ----------------------------------------------------------------------

def cmd_delete(args) -> int:
    g = _graph(args)
    classes = NODE_CLASSES if args.mode == "node" else EDGE_CLASSES
    if args.cls not in classes:
        raise UsageError(f"{args.mode} deletion towards {args.cls!r} is not available; "
                         f"supported classes: {', '.join(classes)}")
    deadline = _deadline(args)
    method = args.method
    if method == "auto":
        size = g.n if args.mode == "node" else g.m
        method = "exact" if args.prefer_exact and size <= args.cap else "approx"
    if method == "exact":
        res = exact_deletion(g, args.cls, args.mode, args.cap, deadline)
    else:
        res = approximate_deletion(g, args.cls, args.mode)
    _emit(args, res.to_json())
    return EXIT_OK


# -- solve -----------------------------------------------------------------------

def _nice(args, g: Graph):
    if args.td:
        td = load_td(args.td)
        validate(g, td)
    else:
        td = decompose(g, args.strategy)
    return make_nice(td)


def cmd_solve(args) -> int:
    g = _graph(args)
    deadline = _deadline(args)
    v = args.variant
    if v in DOMINATION_VARIANTS:
        if v in DP_VARIANTS and not args.exhaustive:
            res = solve_domination_dp(g, _nice(args, g), v, deadline=deadline)
        else:
            res = solve_domination_exact(g, v, deadline=deadline)
        if not res.feasible:
            _emit(args, res.to_json())
            return EXIT_INFEASIBLE
        _emit(args, res.to_json())
        return EXIT_OK
    if not args.min_k and args.k is None:
        raise UsageError(f"{v} needs --k or --min-k")
    if args.k is not None and args.k < 0:
        raise UsageError("--k must be non-negative")
    if v == "coloring":
        if args.exhaustive:
            res = (min_colors_exact(g, "proper", deadline=deadline) if args.min_k
                   else solve_coloring_exact(g, "proper", args.k, deadline=deadline))
        else:
            nd = _nice(args, g)
            res = (chromatic_number_dp(g, nd, deadline=deadline) if args.min_k
                   else solve_coloring_dp(g, nd, args.k, deadline=deadline))
    else:
        res = (min_colors_exact(g, v, deadline=deadline) if args.min_k
               else solve_coloring_exact(g, v, args.k, deadline=deadline))
    if res is None:
        _emit(args, {"variant": v, "k": args.k, "infeasible": True})
        return EXIT_INFEASIBLE
    _emit(args, res.to_json())
    return EXIT_OK


# -- decompose -------------------------------------------------------------------

def cmd_decompose(args) -> int:
    g = _graph(args)
    td = decompose(g, args.strategy)
    data = write_td(td)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        _emit(args, {"strategy": args.strategy, "width": td.width, "bags": len(td.bags)})
    else:
        sys.stdout.write(data.decode())
    return EXIT_OK


# -- check -----------------------------------------------------------------------

def _parse_members(text: str, sort: Sort) -> frozenset:
    out = set()
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        try:
            if sort == Sort.ESET:
                u, w = tok.split("-")
                out.add((int(u), int(w)))
            else:
                out.add(int(tok))
        except ValueError:
            kind = "edge 'u-v'" if sort == Sort.ESET else "vertex id"
            raise UsageError(f"cannot read {tok!r} as a {kind}") from None
    return frozenset(out)


def _load_formula(args):
    spec = args.formula
    if spec.startswith("@"):
        name = spec[1:]
        if name in COLORING_NAMES and args.k is None:
            raise UsageError(f"@{name} needs --k")
        return catalog_formula(name, args.k if name in COLORING_NAMES else None)
    with open(spec, encoding="utf-8") as fh:
        return parse_formula(fh.read())


def cmd_check(args) -> int:
    f = _load_formula(args)
    g = _graph(args)
    free = free_variables(f)
    sets: dict[str, frozenset] = {}
    elements: dict[str, int] = {}
    for item in args.bind or ():
        name, _, value = item.partition("=")
        if name not in free:
            raise UsageError(f"formula has no free variable {name!r}")
        if free[name].is_set:
            sets[name] = _parse_members(value, free[name])
        else:
            members = _parse_members(value, Sort.ESET if free[name] == Sort.EDGE else Sort.VSET)
            if len(members) != 1:
                raise UsageError(f"element variable {name} needs exactly one value")
            elements[name] = next(iter(members))
    if args.set is not None:
        unbound = [n for n, s in free.items() if s.is_set and n not in sets]
        if len(unbound) != 1:
            raise UsageError("--set needs exactly one unbound free set variable; use --bind")
        sets[unbound[0]] = _parse_members(args.set, free[unbound[0]])
    missing = sorted(set(free) - set(sets) - set(elements))
    if missing:
        raise UsageError(f"unbound free variables: {', '.join(missing)}")
    value = evaluate(f, Structure(g, sets, elements), _deadline(args))
    _emit(args, {"value": value})
    return EXIT_OK if value else EXIT_NO


# -- gen -------------------------------------------------------------------------

def _int_arg(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def cmd_gen(args) -> int:
    p = args.params
    kind = args.kind
    want = 2 if kind == "gnp" else 1
    if len(p) != want:
        raise UsageError(f"gen {kind} takes {want} parameter(s)")
    n = _int_arg(p[0], "n")
    if n < 0:
        raise UsageError("n must be non-negative")
    td = None
    if kind == "gnp":
        try:
            prob = float(p[1])
        except ValueError:
            raise UsageError(f"p must be a number, got {p[1]!r}") from None
        g = generators.gnp(n, prob, args.seed)
    elif kind == "partial-2-tree":
        g, bags, tree = generators.partial_2_tree(n, args.seed)
        td = TreeDecomposition(n, tuple(bags), tuple(tree))
    else:
        g = getattr(generators, kind)(n)
    if args.td:
        if td is None:
            td = decompose(g, "min-fill")
        with open(args.td, "wb") as fh:
            fh.write(write_td(td))
    data = write_graph(g, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


# -- audit -----------------------------------------------------------------------

def cmd_audit(args) -> int:
    """Approximation versus exact optimum on a batch of random graphs."""
    classes = NODE_CLASSES if args.mode == "node" else EDGE_CLASSES
    if args.cls not in classes:
        raise UsageError(f"{args.mode} deletion towards {args.cls!r} is not available")
    if not 1 <= args.n_min <= args.n_max:
        raise UsageError("need 1 <= --n-min <= --n-max")
    rng = random.Random(args.seed)
    deadline = _deadline(args)
    ratios = []
    skipped = 0
    attempts = 0
    while len(ratios) < args.count:
        attempts += 1
        if attempts > 50 * args.count:
            break
        n = rng.randint(args.n_min, args.n_max)
        g = generators.gnp(n, rng.uniform(0.2, 0.7), rng.randrange(2**31))
        if args.connected and not is_connected(g):
            continue
        approx = approximate_deletion(g, args.cls, args.mode).size
        try:
            exact = exact_deletion(g, args.cls, args.mode, args.cap, deadline).size
        except CapExceeded:
            skipped += 1
            continue
        ratios.append(1.0 if exact == approx == 0 else approx / exact if exact else float("inf"))
    bound = RATIO_BOUNDS.get(args.cls) if args.mode == "node" else None
    payload = {
        "class": args.cls, "mode": args.mode, "graphs": len(ratios), "skipped": skipped,
        "seed": args.seed, "ratioBound": bound,
        "maxRatio": max(ratios, default=None),
        "meanRatio": statistics.fmean(ratios) if ratios else None,
        "histogram": {f"{r:.3f}": c for r, c in sorted(Counter(ratios).items())},
        "violations": sum(1 for r in ratios if bound is not None and r > bound),
    }
    _emit(args, payload)
    return EXIT_NO if payload["violations"] else EXIT_OK


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="edge-list", help="graph file format")
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--deadline", type=float, default=None,
                        help=f"seconds before giving up (fallback: ${DEADLINE_ENV})")

    parser = argparse.ArgumentParser(prog="graphlogic", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common], help="test class membership")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("graph")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("delete", parents=[common], help="node or edge deletion to a class")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("--mode", choices=("node", "edge"), default="node")
    p.add_argument("--method", choices=("exact", "approx", "auto"), default="auto")
    p.add_argument("--prefer-exact", action="store_true",
                   help="with --method auto, solve exactly when within the cap")
    p.add_argument("--cap", type=int, default=16, help="largest n (node) or m (edge) for exact")
    p.add_argument("graph")
    p.set_defaults(func=cmd_delete)

    p = sub.add_parser("solve", parents=[common], help="domination and coloring problems")
    p.add_argument("--variant", required=True, choices=SOLVE_VARIANTS)
    p.add_argument("--k", type=int, default=None, help="number of colors")
    p.add_argument("--min-k", action="store_true", help="find the least feasible k")
    p.add_argument("--td", default=None, help="PACE .td decomposition to use for the DP")
    p.add_argument("--strategy", choices=STRATEGIES, default="min-fill")
    p.add_argument("--exhaustive", action="store_true", help="skip the DP, search exhaustively")
    p.add_argument("graph")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decompose", parents=[common], help="tree decomposition in PACE format")
    p.add_argument("--strategy", choices=STRATEGIES, default="min-fill")
    p.add_argument("-o", "--out", default=None)
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", parents=[common], help="evaluate a formula")
    p.add_argument("--formula", required=True, help="formula file, or @name for a catalog entry")
    p.add_argument("--set", default=None, help='members of the free set variable, e.g. "0,2" or "0-1,2-3"')
    p.add_argument("--bind", action="append", metavar="NAME=VALUES",
                   help="bind a named free variable (repeatable)")
    p.add_argument("--k", type=int, default=None, help="colors for catalog coloring formulas")
    p.add_argument("graph")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", parents=[common], help="generate a graph")
    p.add_argument("kind", choices=("path", "cycle", "star", "gnp", "partial-2-tree"))
    p.add_argument("params", nargs="*", help="n, plus p for gnp")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out", default=None)
    p.add_argument("--td", default=None, help="also write a decomposition here")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("audit", parents=[common], help="approximation ratio campaign")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("--mode", choices=("node", "edge"), default="node")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--cap", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, DeadlineExceeded) as exc:
        print(f"graphlogic: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"graphlogic: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
