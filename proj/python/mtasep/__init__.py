"""Exact steady states and R-matrix checks for the multi-species TASEP on a ring."""

from ._core import (
    BudgetExceeded,
    ConsistencyError,
    apply_r,
    conjecture_check,
    hat_check,
    pi,
    rmatrix,
    steady,
    x_operator,
    ybe_check,
)

__all__ = [
    "BudgetExceeded",
    "ConsistencyError",
    "apply_r",
    "conjecture_check",
    "hat_check",
    "pi",
    "rmatrix",
    "steady",
    "x_operator",
    "ybe_check",
]
