"""Decide set identities, tautologies and product equalities by extreme cases."""

from ._core import (
    BudgetExceeded,
    Error,
    EvaluationError,
    ParseError,
    Statement,
    UnsupportedError,
    Verdict,
    decide,
    explain,
    independent,
    oracle,
    parse,
    reduce_product,
    to_logic,
    to_sets,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "EvaluationError",
    "ParseError",
    "Statement",
    "UnsupportedError",
    "Verdict",
    "decide",
    "explain",
    "independent",
    "oracle",
    "parse",
    "reduce_product",
    "to_logic",
    "to_sets",
]
