"""Named formulas: deletion problems, domination variants, graph classes, colorings.

Fixed formulas live as ``.fol`` files under ``assets/formulas``. Coloring
predicates depend on the number of colors ``k``: color class ``i`` is the
free vertex-set variable ``C<i>`` (and ``F<i>`` for edge classes), and the
text is generated for the requested ``k``.
"""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .parser import parse_formula
from .syntax import Formula


class UnknownFormulaError(KeyError):
    pass


COLORING_NAMES = (
    "color_vertices", "color_edges", "proper_vertex_coloring", "star_coloring",
    "cd_coloring", "edge_coloring", "rainbow_coloring", "total_coloring",
    "equitable_coloring",
)


def _asset_dir():
    return resources.files(__package__) / "assets" / "formulas"


@lru_cache(maxsize=None)
def asset_text(name: str) -> str:
    path = _asset_dir() / f"{name}.fol"
    if not path.is_file():
        raise UnknownFormulaError(name)
    return path.read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def fixed_names() -> tuple[str, ...]:
    return tuple(sorted(p.name[:-4] for p in _asset_dir().iterdir() if p.name.endswith(".fol")))


def _any(parts: list[str]) -> str:
    return "(" + " | ".join(parts) + ")" if parts else "false"


def _all(parts: list[str]) -> str:
    return "(" + " & ".join(parts) + ")" if parts else "true"


def _exactly_one(pred: str, var: str, k: int) -> str:
    at_least = _any([f"{pred}{i}({var})" for i in range(k)])
    at_most = [f"!({pred}{i}({var}) & {pred}{j}({var}))" for i in range(k) for j in range(i + 1, k)]
    return _all([at_least, *at_most])


def coloring_text(name: str, k: int) -> str:
    """Concrete syntax of coloring predicate ``name`` for ``k`` colors."""
    if k < 0:
        raise ValueError("k must be non-negative")
    colors = range(k)
    vertices = f"(forall x. {_exactly_one('C', 'x', k)})"
    edges = f"(forall e in E. {_exactly_one('F', 'e', k)})"
    proper = _all([vertices, "(forall x, y. E(x,y) -> "
                   + _all([f"!(C{i}(x) & C{i}(y))" for i in colors]) + ")"])
    edge_proper = ("(forall x, y, z. (E(x,y) & E(y,z) & x != z) -> "
                   + _all([f"!(F{i}(x,y) & F{i}(y,z))" for i in colors]) + ")")

    def same(a: str, b: str) -> str:
        return _any([f"(C{i}({a}) & C{i}({b}))" for i in colors])

    if name == "color_vertices":
        return vertices
    if name == "color_edges":
        return edges
    if name == "proper_vertex_coloring":
        return proper
    if name == "star_coloring":
        # a proper coloring puts only two colors on the path x-y-z-w exactly
        # when x, z match and y, w match
        return _all([proper, "(forall x, y, z, w. (E(x,y) & E(y,z) & E(z,w) & x != z & y != w"
                     f" & x != w) -> !({same('x', 'z')} & {same('y', 'w')}))"])
    if name == "cd_coloring":
        dominated = [f"(exists u. (C{i}(u) & |C{i}| = 1) | (!C{i}(u) & (forall a. C{i}(a) -> E(u,a))))"
                     for i in colors]
        return _all([proper, *dominated])
    if name == "edge_coloring":
        return _all([edges, edge_proper])
    if name == "rainbow_coloring":
        return _all([edges, "rainbow(" + ", ".join(f"F{i}" for i in colors) + ")"])
    if name == "total_coloring":
        incident = ("(forall x, y. E(x,y) -> "
                    + _all([f"!(F{i}(x,y) & C{i}(x))" for i in colors]) + ")")
        return _all([proper, edges, edge_proper, incident])
    if name == "equitable_coloring":
        # empty classes are unused colors and do not count towards balance
        balanced = [f"(|C{i}| = 0 | |C{j}| = 0 | (|C{i}| <= |C{j}| + 1 & |C{j}| <= |C{i}| + 1))"
                    for i in colors for j in range(i + 1, k)]
        return _all([proper, *balanced])
    raise UnknownFormulaError(name)


@lru_cache(maxsize=None)
def catalog_formula(name: str, k: int | None = None) -> Formula:
    """Parsed catalog entry; coloring predicates need ``k``."""
    if name in COLORING_NAMES:
        if k is None:
            raise ValueError(f"{name} needs the number of colors k")
        return parse_formula(coloring_text(name, k))
    return parse_formula(asset_text(name))


def formula_catalog(k: int | None = None) -> dict[str, Formula]:
    """All fixed formulas, plus the coloring predicates when ``k`` is given."""
    out = {name: catalog_formula(name) for name in fixed_names()}
    if k is not None:
        out.update({name: catalog_formula(name, k) for name in COLORING_NAMES})
    return out
