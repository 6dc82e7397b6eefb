"""FO/MSO formulas over graphs: parsing, brute-force evaluation, catalog."""
from .catalog import (COLORING_NAMES, UnknownFormulaError, catalog_formula,
                      coloring_text, formula_catalog)
from .parser import (FormulaSyntaxError, SortError, UnboundVariableError,
                     parse_formula)
from .semantics import (EvaluationError, MinSetResult, Structure, evaluate,
                        min_satisfying_set)
from .syntax import Formula, Sort, free_variables, unparse

__all__ = [
    "COLORING_NAMES", "EvaluationError", "Formula", "FormulaSyntaxError",
    "MinSetResult", "Sort", "SortError", "Structure", "UnboundVariableError",
    "UnknownFormulaError", "catalog_formula", "coloring_text", "evaluate",
    "formula_catalog", "free_variables", "min_satisfying_set", "parse_formula",
    "unparse",
]
