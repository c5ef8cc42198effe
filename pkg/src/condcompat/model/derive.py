"""Conditionals of a joint distribution."""

from __future__ import annotations

from loguru import logger

from condcompat.errors import ZeroMarginalError
from condcompat.model.conditional import ConditionalMatrix, Orientation
from condcompat.model.joint import JointDistribution


def derive_conditionals(
    p: JointDistribution,
) -> tuple[ConditionalMatrix, ConditionalMatrix]:
    """Return ``(A, B)`` with ``a_ij = p_ij / p_.j`` and ``b_ij = p_ij / p_i.``.

    Raises:
        ZeroMarginalError: a row or column of ``p`` sums to zero.
    """
    rows = p.row_marginals()
    cols = p.column_marginals()
    for i, total in enumerate(rows):
        if total == 0:
            raise ZeroMarginalError(i, "row")
    for j, total in enumerate(cols):
        if total == 0:
            raise ZeroMarginalError(j, "column")

    a = ConditionalMatrix(
        Orientation.GIVEN_COLUMN,
        tuple(tuple(x / cols[j] for j, x in enumerate(row)) for row in p.entries),
    )
    b = ConditionalMatrix(
        Orientation.GIVEN_ROW,
        tuple(tuple(x / rows[i] for x in row) for i, row in enumerate(p.entries)),
    )
    logger.debug(f"Derived conditionals of a {p.dims[0]}x{p.dims[1]} joint")
    return a, b
