"""Stochasticity checks that report defects instead of raising."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from condcompat.errors import DimensionMismatchError
from condcompat.model.conditional import Cell, ConditionalMatrix, Orientation


@dataclass(frozen=True)
class Violation:
    """One defect of a conditional matrix.

    ``axis`` is ``"row"``, ``"column"`` or ``"cell"``; ``index`` is the 0-based
    row/column index (or the cell). ``amount`` is the exact defect: how far the
    sum is from 1, how far the known sum exceeds 1, or the out-of-range value.
    """

    kind: str
    axis: str
    index: int | Cell
    amount: Fraction

    def __str__(self) -> str:
        where = (
            f"cell ({self.index[0] + 1},{self.index[1] + 1})"
            if isinstance(self.index, tuple)
            else f"{self.axis} {self.index + 1}"
        )
        return f"{self.kind} at {where}: {self.amount}"


def validate(m: ConditionalMatrix) -> list[Violation]:
    """Return every invariant violation of ``m`` (empty when valid)."""
    violations: list[Violation] = []
    i_max, j_max = m.dims

    for i in range(i_max):
        for j in range(j_max):
            x = m.get(i, j)
            if x is not None and not (0 <= x <= 1):
                violations.append(Violation("entry_out_of_range", "cell", (i, j), x))

    if m.orientation is Orientation.GIVEN_COLUMN:
        lines = [[(i, j) for i in range(i_max)] for j in range(j_max)]
        axis = "column"
    else:
        lines = [[(i, j) for j in range(j_max)] for i in range(i_max)]
        axis = "row"

    for index, cells in enumerate(lines):
        known = [m.values[i][j] for i, j in cells if m.is_known(i, j)]
        total = sum(known, Fraction(0))
        if len(known) == len(cells):
            if total != 1:
                violations.append(Violation("sum_not_one", axis, index, total - 1))
        elif total > 1:
            violations.append(
                Violation("known_sum_exceeds_one", axis, index, total - 1)
            )

    return violations


def zero_pattern_warnings(a: ConditionalMatrix, b: ConditionalMatrix) -> list[Cell]:
    """Cells where exactly one of ``a_ij``, ``b_ij`` is zero.

    Such a cell forces ``eta_i = 0`` (or ``tau_j = 0``) or makes the pair
    incompatible; the rank test decides which.
    """
    if a.dims != b.dims:
        raise DimensionMismatchError(f"A is {a.dims} but B is {b.dims}")
    i_max, j_max = a.dims
    cells: list[Cell] = []
    for i in range(i_max):
        for j in range(j_max):
            x, y = a.get(i, j), b.get(i, j)
            if x is None or y is None:
                continue
            if (x == 0) != (y == 0):
                cells.append((i, j))
    return cells
