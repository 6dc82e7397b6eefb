"""Tree decompositions and the solvers that run on them."""
from .coloring import (ColoringAssignment, chromatic_number_dp, min_colors_exact,
                       solve_coloring_dp, solve_coloring_exact)
from .decomposition import (STRATEGIES, TreeDecomposition, decompose, is_valid, load_td,
                            problems, read_td, treewidth, validate, write_td)
from .domination import DominationResult, solve_domination_dp, solve_domination_exact
from .nice import NiceDecomposition, NiceNode, make_nice, nice_problems, validate_nice

__all__ = [
    "ColoringAssignment", "chromatic_number_dp", "min_colors_exact", "solve_coloring_dp",
    "solve_coloring_exact", "STRATEGIES", "TreeDecomposition", "decompose", "is_valid",
    "load_td", "problems", "read_td", "treewidth", "validate", "write_td",
    "DominationResult", "solve_domination_dp", "solve_domination_exact",
    "NiceDecomposition", "NiceNode", "make_nice", "nice_problems", "validate_nice",
]
