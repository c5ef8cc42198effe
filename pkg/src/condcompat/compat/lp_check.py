"""Compatibility as a linear-programming feasibility question.

maximize ``sum(y)`` subject to ``D_r y = 0``, ``sum(y) <= 1``, ``y >= 0``.
A positive optimum gives a nonnegative kernel vector of D, scaled into eta;
an optimum of 0 means the only nonnegative solution is the null vector.
"""

from __future__ import annotations

from fractions import Fraction

from loguru import logger

from condcompat.compat.recovery import non_unique_verdict, normalize, unique_verdict
from condcompat.dsystem import DSystem, build_D, reduce_D
from condcompat.exact import RatMatrix, Vector, null_space
from condcompat.lp import LinearProgram, Optimal, solve
from condcompat.model import CompatibilityVerdict, ConditionalMatrix, Incompatible


def feasibility_program(d_r: RatMatrix) -> LinearProgram:
    n = d_r.cols
    ones = (Fraction(1),) * n
    return LinearProgram(
        objective=ones,
        a_eq=d_r if d_r.rows else None,
        b_eq=(Fraction(0),) * d_r.rows,
        a_ub=RatMatrix((ones,), n),
        b_ub=(Fraction(1),),
    )


def feasibility_optimum(d_r: RatMatrix) -> Optimal:
    result = solve(feasibility_program(d_r))
    # y = 0 is always feasible and sum(y) <= 1 bounds the objective.
    assert isinstance(result, Optimal), result
    return result


def nonnegative_kernel_vector(d: DSystem) -> Vector | None:
    """A stochastic eta with ``D eta = 0``, or ``None`` if none exists."""
    optimum = feasibility_optimum(reduce_D(d))
    if optimum.value == 0:
        return None
    return normalize(optimum.point)


def check_lp(a: ConditionalMatrix, b: ConditionalMatrix) -> CompatibilityVerdict:
    """Decide compatibility by the feasibility program on D_r."""
    d = build_D(a, b)
    d_r = reduce_D(d)
    rank = d_r.rows
    i_max = d.dims[0]

    optimum = feasibility_optimum(d_r)
    logger.debug(f"check_lp: rank {rank} of {i_max}, LP maximum {optimum.value}")
    if optimum.value == 0:
        return Incompatible(rank)

    eta = normalize(optimum.point)
    if rank == i_max - 1:
        return unique_verdict(b, rank, eta)
    return non_unique_verdict(b, rank, null_space(d.d), eta)
