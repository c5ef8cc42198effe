"""Marginal and joint recovery from B and an X-marginal."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from condcompat.errors import DimensionMismatchError, OrientationError
from condcompat.exact import Vector, to_rational
from condcompat.model import (
    CompatibleNonUnique,
    CompatibleUnique,
    ConditionalMatrix,
    JointDistribution,
    MarginalPair,
    Orientation,
    as_stochastic,
)


def tau_from_eta(b: ConditionalMatrix, eta: Sequence[Fraction]) -> Vector:
    """``tau_j = sum_s b_sj eta_s``."""
    i_max, j_max = b.dims
    if len(eta) != i_max:
        raise DimensionMismatchError(f"eta has length {len(eta)}, B has {i_max} rows")
    return tuple(
        sum((b[s, j] * eta[s] for s in range(i_max)), Fraction(0)) for j in range(j_max)
    )


def recover_joint(b: ConditionalMatrix, eta: Sequence[Fraction]) -> JointDistribution:
    """``p_ij = b_ij * eta_i``; sums to one because B is row-stochastic."""
    if b.orientation is not Orientation.GIVEN_ROW:
        raise OrientationError("joint recovery needs the given-row matrix B")
    eta = as_stochastic(eta)
    i_max, j_max = b.dims
    if len(eta) != i_max:
        raise DimensionMismatchError(f"eta has length {len(eta)}, B has {i_max} rows")
    return JointDistribution(
        tuple(tuple(b[i, j] * eta[i] for j in range(j_max)) for i in range(i_max))
    )


def normalize(v: Sequence[Fraction]) -> Vector | None:
    """Scale ``v`` to sum one; ``None`` if that leaves a negative entry."""
    total = sum(v, Fraction(0))
    if total == 0:
        return None
    scaled = tuple(to_rational(x) / total for x in v)
    if any(x < 0 for x in scaled):
        return None
    return scaled


def unique_verdict(b: ConditionalMatrix, rank: int, eta: Vector) -> CompatibleUnique:
    tau = tau_from_eta(b, eta)
    return CompatibleUnique(rank, MarginalPair(eta, tau), recover_joint(b, eta))


def non_unique_verdict(
    b: ConditionalMatrix,
    rank: int,
    basis: Sequence[Vector],
    eta: Vector | None,
) -> CompatibleNonUnique:
    if eta is None:
        return CompatibleNonUnique(rank, tuple(basis))
    tau = tau_from_eta(b, eta)
    return CompatibleNonUnique(
        rank, tuple(basis), MarginalPair(eta, tau), recover_joint(b, eta)
    )
