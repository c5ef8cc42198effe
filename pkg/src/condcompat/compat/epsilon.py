"""Minimal epsilon-compatibility.

minimize ``eps`` subject to ``-eps <= (D eta)_r <= eps`` for every row r of D,
``sum(eta) = 1``, ``eta >= 0``. The optimum is 0 exactly when a compatible
eta exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from condcompat.dsystem import build_D
from condcompat.exact import RatMatrix, Vector
from condcompat.lp import LinearProgram, Optimal, solve
from condcompat.model import ConditionalMatrix


@dataclass(frozen=True)
class EpsilonResult:
    epsilon_star: Fraction
    eta: Vector

    @property
    def is_compatible(self) -> bool:
        return self.epsilon_star == 0


def epsilon_program(d: RatMatrix) -> LinearProgram:
    """Variables ``(eta_1, ..., eta_I, eps)``; maximize ``-eps``."""
    i_max = d.cols
    zero, one = Fraction(0), Fraction(1)
    ub_rows = []
    for row in d.data:
        ub_rows.append(tuple(row) + (-one,))
        ub_rows.append(tuple(-x for x in row) + (-one,))
    return LinearProgram(
        objective=(zero,) * i_max + (-one,),
        a_eq=RatMatrix(((one,) * i_max + (zero,),), i_max + 1),
        b_eq=(one,),
        a_ub=RatMatrix(tuple(ub_rows), i_max + 1),
        b_ub=(zero,) * len(ub_rows),
    )


def min_epsilon(a: ConditionalMatrix, b: ConditionalMatrix) -> EpsilonResult:
    d = build_D(a, b)
    result = solve(epsilon_program(d.d))
    # The simplex is nonempty and eps >= 0 bounds the objective.
    assert isinstance(result, Optimal), result
    eps = -result.value
    eta = result.point[:-1]
    logger.debug(f"min_epsilon: eps* = {eps} at eta = {eta}")
    return EpsilonResult(eps, eta)
