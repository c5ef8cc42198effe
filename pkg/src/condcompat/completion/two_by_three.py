"""Closed-form completion of a 2x3 pair with unknowns in both A and B.

Supported pattern (1-based): ``alpha_12``, ``alpha_22`` in column 2 of A and
``beta_12``, ``beta_13`` in row 1 of B. Column 1 of A and row 2 of B give eta_1;
column 3 of A then fixes ``beta_13``, row 1 of B fixes ``beta_12`` and column 2
of A follows from eta.
"""

from __future__ import annotations

from fractions import Fraction

from loguru import logger

from condcompat.completion.column import complete_column_in_A
from condcompat.completion.result import CompletionResult, ExactUnique
from condcompat.errors import (
    DivisionByZeroError,
    InfeasibleFillError,
    OrientationError,
    PatternMismatchError,
)
from condcompat.model import Cell, ConditionalMatrix, Orientation

A_PATTERN: frozenset[Cell] = frozenset({(0, 1), (1, 1)})
B_PATTERN: frozenset[Cell] = frozenset({(0, 1), (0, 2)})

PATTERN_HELP = (
    "2x3 pair with a[1,2], a[2,2] and b[1,2], b[1,3] unknown, all else known"
)


def _nonzero(value: Fraction, what: str) -> Fraction:
    if value == 0:
        raise DivisionByZeroError(f"{what} is zero")
    return value


def _in_unit(value: Fraction, name: str) -> Fraction:
    if not 0 <= value <= 1:
        raise InfeasibleFillError(f"{name} = {value} lies outside [0, 1]")
    return value


def matches_pattern(a: ConditionalMatrix, b: ConditionalMatrix) -> bool:
    return (
        a.dims == (2, 3)
        and b.dims == (2, 3)
        and a.unknown == A_PATTERN
        and b.unknown == B_PATTERN
    )


def complete_A_and_B_2x3(  # noqa: N802
    a: ConditionalMatrix, b: ConditionalMatrix
) -> CompletionResult:
    if a.orientation is not Orientation.GIVEN_COLUMN:
        raise OrientationError("A must be a given-column (P(X|Y)) matrix")
    if b.orientation is not Orientation.GIVEN_ROW:
        raise OrientationError("B must be a given-row (P(Y|X)) matrix")
    if not matches_pattern(a, b):
        raise PatternMismatchError(f"expected {PATTERN_HELP}")

    a11, a21, a13, a23 = a[0, 0], a[1, 0], a[0, 2], a[1, 2]
    b11, b21, b22, b23 = b[0, 0], b[1, 0], b[1, 1], b[1, 2]

    eta1 = a11 * b21 / _nonzero(a11 * b21 + b11 * (1 - a11), "a11*b21 + b11*(1-a11)")
    beta13 = _in_unit(
        b11 * b23 * a21 * a13 / _nonzero(a11 * a23 * b21, "a11*a23*b21"), "beta_13"
    )
    beta12 = _in_unit(1 - b11 - beta13, "beta_12")
    alpha12 = _in_unit(
        beta12 * eta1
        / _nonzero(beta12 * eta1 + b22 * (1 - eta1), "beta12*eta1 + b22*(1-eta1)"),
        "alpha_12",
    )
    alpha22 = 1 - alpha12
    logger.debug(
        f"2x3 closed forms: eta1={eta1}, beta13={beta13}, beta12={beta12}, "
        f"alpha12={alpha12}"
    )

    cells_b = {(0, 1): beta12, (0, 2): beta13}
    closed = {(0, 1): alpha12, (1, 1): alpha22}
    filled_b = b.fill(cells_b)

    general = complete_column_in_A(a, filled_b)
    if not isinstance(general.diagnostics, ExactUnique):
        logger.warning(
            "Closed-form B fill does not admit an exact A completion: "
            f"{general.diagnostics.label}"
        )
        return CompletionResult(
            general.filled_a,
            filled_b,
            general.eta,
            general.diagnostics,
            general.filled_cells_a,
            cells_b,
            general.verdict,
        )
    if dict(general.filled_cells_a) != closed:
        logger.warning(
            f"Closed form {closed} disagrees with the general solver "
            f"{dict(general.filled_cells_a)}; keeping the latter"
        )
    return CompletionResult(
        general.filled_a,
        filled_b,
        general.eta,
        ExactUnique(),
        general.filled_cells_a,
        cells_b,
        general.verdict,
    )
