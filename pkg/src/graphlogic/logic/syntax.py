"""Abstract syntax for the FO/MSO fragment over graphs.

Variables come in four sorts: vertices, edges, vertex sets and edge sets.
Element variables are bound by ``forall``/``exists``; set variables may be
bound by a set quantifier or left free (they are then supplied by the
structure a formula is evaluated in).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union


class Sort(enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    VSET = "vertex-set"
    ESET = "edge-set"

    @property
    def is_set(self) -> bool:
        return self in (Sort.VSET, Sort.ESET)


@dataclass(frozen=True)
class SetRef:
    """A set argument: a set variable, the whole universe, or its complement.

    ``name=None`` stands for all of V (``universe=VSET``) or all of E.
    ``minus`` means "universe minus the named set".
    """
    name: str | None
    universe: Sort = Sort.VSET
    minus: bool = False


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Adj:
    x: str
    y: str


@dataclass(frozen=True)
class Eq:
    x: str
    y: str


@dataclass(frozen=True)
class Member:
    """``X(t)``: element variable ``t`` (vertex or edge) belongs to set ``X``."""
    elem: str
    set: str


@dataclass(frozen=True)
class EdgeMember:
    """``X(x, y)``: the edge ``{x, y}`` belongs to edge set ``X``."""
    x: str
    y: str
    set: str


@dataclass(frozen=True)
class Incident:
    vertex: str
    edge: str


CARD_OPS = ("<=", "<", "=", "!=", ">=", ">")


@dataclass(frozen=True)
class Card:
    """``|X| op k`` or ``|X| op |Y| + k``."""
    set: str
    op: str
    bound: int
    other: str | None = None


BUILTINS = {
    # name -> (argument sort, arity or None for variadic)
    "connected": (Sort.VSET, 1),
    "cycle": (Sort.VSET, 1),
    "comparability": (None, 1),
    "cocomparability": (None, 1),
    "rainbow": (Sort.ESET, None),
}


@dataclass(frozen=True)
class Builtin:
    name: str
    args: tuple[SetRef, ...]


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    parts: tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    parts: tuple["Formula", ...]


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Quant:
    kind: str  # "forall" | "exists"
    var: str
    sort: Sort
    body: "Formula"


Formula = Union[Const, Adj, Eq, Member, EdgeMember, Incident, Card, Builtin,
                Not, And, Or, Implies, Iff, Quant]


def free_variables(f: Formula) -> dict[str, Sort]:
    """Free variables of ``f`` with their sorts, inferred from usage.

    A set variable seen only inside cardinality guards defaults to a vertex set.
    """
    found: dict[str, Sort] = {}

    def elem(name: str, sort: Sort, scope: dict[str, Sort]) -> Sort:
        if name in scope:
            return scope[name]
        found.setdefault(name, sort)
        return found[name]

    def setvar(name: str, sort: Sort, scope: dict[str, Sort]):
        if name not in scope:
            found[name] = sort

    def walk(node, scope: dict[str, Sort]):
        if isinstance(node, Const):
            return
        if isinstance(node, (Adj, Eq)):
            elem(node.x, Sort.VERTEX, scope)
            elem(node.y, Sort.VERTEX, scope)
        elif isinstance(node, Member):
            s = elem(node.elem, Sort.VERTEX, scope)
            setvar(node.set, Sort.ESET if s == Sort.EDGE else Sort.VSET, scope)
        elif isinstance(node, EdgeMember):
            elem(node.x, Sort.VERTEX, scope)
            elem(node.y, Sort.VERTEX, scope)
            setvar(node.set, Sort.ESET, scope)
        elif isinstance(node, Incident):
            elem(node.vertex, Sort.VERTEX, scope)
            elem(node.edge, Sort.EDGE, scope)
        elif isinstance(node, Card):
            for s in (node.set, node.other):
                if s is not None and s not in scope and s not in found:
                    found[s] = Sort.VSET
        elif isinstance(node, Builtin):
            for a in node.args:
                if a.name is not None:
                    setvar(a.name, a.universe, scope)
        elif isinstance(node, Not):
            walk(node.body, scope)
        elif isinstance(node, (And, Or)):
            for p in node.parts:
                walk(p, scope)
        elif isinstance(node, (Implies, Iff)):
            walk(node.left, scope)
            walk(node.right, scope)
        elif isinstance(node, Quant):
            walk(node.body, {**scope, node.var: node.sort})
        else:  # pragma: no cover
            raise TypeError(f"not a formula node: {node!r}")

    walk(f, {})
    return found


# -- unparsing -----------------------------------------------------------------

def _setref(a: SetRef) -> str:
    base = "V" if a.universe == Sort.VSET else "E"
    if a.name is None:
        return base
    return f"{base} - {a.name}" if a.minus else a.name


_BINDER = {Sort.VERTEX: "", Sort.EDGE: " in E", Sort.VSET: " subset V", Sort.ESET: " subset E"}


def unparse(f: Formula) -> str:
    """Fully parenthesised concrete syntax; ``parse(unparse(f)) == f``."""
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Adj):
        return f"E({f.x},{f.y})"
    if isinstance(f, Eq):
        return f"{f.x} = {f.y}"
    if isinstance(f, Member):
        return f"{f.set}({f.elem})"
    if isinstance(f, EdgeMember):
        return f"{f.set}({f.x},{f.y})"
    if isinstance(f, Incident):
        return f"inc({f.vertex},{f.edge})"
    if isinstance(f, Card):
        rhs = str(f.bound)
        if f.other is not None:
            rhs = f"|{f.other}|"
            if f.bound:
                rhs += f" + {f.bound}" if f.bound > 0 else f" - {-f.bound}"
        return f"|{f.set}| {f.op} {rhs}"
    if isinstance(f, Builtin):
        return f"{f.name}({', '.join(_setref(a) for a in f.args)})"
    if isinstance(f, Not):
        return f"!({unparse(f.body)})"
    if isinstance(f, And):
        return "(" + " & ".join(unparse(p) for p in f.parts) + ")"
    if isinstance(f, Or):
        return "(" + " | ".join(unparse(p) for p in f.parts) + ")"
    if isinstance(f, Implies):
        return f"({unparse(f.left)} -> {unparse(f.right)})"
    if isinstance(f, Iff):
        return f"({unparse(f.left)} <-> {unparse(f.right)})"
    if isinstance(f, Quant):
        return f"({f.kind} {f.var}{_BINDER[f.sort]}. {unparse(f.body)})"
    raise TypeError(f"not a formula node: {f!r}")
