"""Exact Gauss-Jordan elimination: reduced row echelon form, rank, kernel, solve.

Pivots are chosen deterministically: columns are scanned left to right and,
within a column, the first nonzero entry at or below the current pivot row is
used. No partial pivoting is needed because arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from condcompat.errors import DimensionMismatchError
from condcompat.exact.matrix import RatMatrix, Vector


class EchelonForm(NamedTuple):
    reduced: RatMatrix
    rank: int
    pivot_cols: tuple[int, ...]


@dataclass(frozen=True)
class LinearSolution:
    """Solution set ``particular + span(kernel)`` of ``m x = rhs``."""

    particular: Vector
    kernel: tuple[Vector, ...]

    @property
    def is_unique(self) -> bool:
        return not self.kernel


def _rref_rows(rows: list[list[Fraction]], n_cols: int) -> tuple[int, list[int]]:
    """Reduce ``rows`` in place; return (rank, pivot columns)."""
    pivot_row = 0
    pivots: list[int] = []
    n_rows = len(rows)
    for c in range(n_cols):
        if pivot_row == n_rows:
            break
        for r in range(pivot_row, n_rows):
            if rows[r][c] != 0:
                break
        else:
            continue
        if r != pivot_row:
            rows[pivot_row], rows[r] = rows[r], rows[pivot_row]

        lead = rows[pivot_row][c]
        if lead != 1:
            rows[pivot_row] = [x / lead for x in rows[pivot_row]]
        prow = rows[pivot_row]

        for r2 in range(n_rows):
            if r2 == pivot_row:
                continue
            factor = rows[r2][c]
            if factor == 0:
                continue
            rows[r2] = [x - factor * p if p else x for x, p in zip(rows[r2], prow)]

        pivots.append(c)
        pivot_row += 1
    return pivot_row, pivots


def row_echelon(m: RatMatrix) -> EchelonForm:
    """Reduced row echelon form of ``m`` with its rank and pivot columns.

    Zero rows are kept at the bottom so ``reduced`` has the shape of ``m``.
    """
    rows = [list(r) for r in m.data]
    rank, pivots = _rref_rows(rows, m.cols)
    reduced = RatMatrix(tuple(tuple(r) for r in rows), m.cols)
    return EchelonForm(reduced, rank, tuple(pivots))


def rank(m: RatMatrix) -> int:
    return row_echelon(m).rank


def _kernel_from_rref(reduced: RatMatrix, pivots: tuple[int, ...]) -> list[Vector]:
    n = reduced.cols
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for k, p in enumerate(pivots):
            v[p] = -reduced[k, free]
        basis.append(tuple(v))
    return basis


def null_space(m: RatMatrix) -> list[Vector]:
    """Basis of ``{v : m v = 0}``, one vector per free column.

    Each basis vector has a 1 in its free column and zeros in the other free
    columns, so the basis is linearly independent by construction.
    """
    reduced, _, pivots = row_echelon(m)
    return _kernel_from_rref(reduced, pivots)


def solve(m: RatMatrix, rhs: Vector) -> LinearSolution | None:
    """Solve ``m x = rhs`` exactly.

    Returns:
        The solution set, or ``None`` when the system is inconsistent.
    """
    if len(rhs) != m.rows:
        raise DimensionMismatchError(
            f"rhs of length {len(rhs)} for a system with {m.rows} rows"
        )
    augmented = [list(row) + [b] for row, b in zip(m.data, rhs)]
    _, pivots = _rref_rows(augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None

    reduced = RatMatrix(tuple(tuple(r[:-1]) for r in augmented), m.cols)
    particular = [Fraction(0)] * m.cols
    for k, p in enumerate(pivots):
        particular[p] = augmented[k][-1]
    kernel = _kernel_from_rref(reduced, tuple(pivots))
    return LinearSolution(tuple(particular), tuple(kernel))
