"""Exact linear programming for feasibility and min-epsilon programs."""

from condcompat.lp.program import (
    Infeasible,
    LinearProgram,
    LPResult,
    Optimal,
    Unbounded,
)
from condcompat.lp.simplex import SimplexSolver, solve

__all__ = [
    "Infeasible",
    "LPResult",
    "LinearProgram",
    "Optimal",
    "SimplexSolver",
    "Unbounded",
    "solve",
]
