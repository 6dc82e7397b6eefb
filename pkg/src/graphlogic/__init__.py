"""Graph modification and MSO-definable problems, cross-checked by a logic evaluator."""

__version__ = "0.1.0"
