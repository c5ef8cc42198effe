"""The classical cross-product ratio criterion for strictly positive pairs.

For every 2x2 minor (i, i2, j, j2) the pair is compatible only if
``a_ij a_i2j2 / (a_i2j a_ij2) == b_ij b_i2j2 / (b_i2j b_ij2)``. The check is
done cross-multiplied, so no division is needed; minors touching a zero in
either matrix are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from condcompat.errors import DimensionMismatchError
from condcompat.model import ConditionalMatrix


@dataclass(frozen=True)
class Minor:
    """Rows ``i < i2`` and columns ``j < j2`` (0-based)."""

    i: int
    i2: int
    j: int
    j2: int

    def one_based(self) -> tuple[int, int, int, int]:
        return self.i + 1, self.i2 + 1, self.j + 1, self.j2 + 1


@dataclass(frozen=True)
class Agree:
    tested: int

    label = "agree"


@dataclass(frozen=True)
class Disagree:
    witness: Minor

    label = "disagree"


@dataclass(frozen=True)
class Inapplicable:
    zero_cells: tuple[tuple[int, int], ...]

    label = "inapplicable"


CrossProductResult = Agree | Disagree | Inapplicable


def cross_product_check(
    a: ConditionalMatrix, b: ConditionalMatrix
) -> CrossProductResult:
    if a.dims != b.dims:
        raise DimensionMismatchError(f"A is {a.dims} but B is {b.dims}")
    a.require_complete()
    b.require_complete()
    i_max, j_max = a.dims

    tested = 0
    for i, i2 in combinations(range(i_max), 2):
        for j, j2 in combinations(range(j_max), 2):
            cells = ((i, j), (i, j2), (i2, j), (i2, j2))
            if any(a[c] == 0 or b[c] == 0 for c in cells):
                continue
            tested += 1
            lhs = a[i, j] * a[i2, j2] * b[i2, j] * b[i, j2]
            rhs = a[i2, j] * a[i, j2] * b[i, j] * b[i2, j2]
            if lhs != rhs:
                return Disagree(Minor(i, i2, j, j2))

    if tested == 0:
        zeros = tuple(
            (i, j)
            for i in range(i_max)
            for j in range(j_max)
            if a[i, j] == 0 or b[i, j] == 0
        )
        return Inapplicable(zeros)
    return Agree(tested)
