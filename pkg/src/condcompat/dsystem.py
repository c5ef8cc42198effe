"""Linear systems whose solutions are compatible marginals or joints.

D (``IJ x I``) acts on eta: row (i, j) is ``a_ij * tau_j - b_ij * eta_i`` with
``tau_j = sum_s b_sj eta_s``. Rows are ordered i outer, j inner, i.e. row
``i * J + j``.

C (``IJ x IJ``) acts on ``vec(P)`` in row-major order: row (i, j) is
``a_ij * p_.j - b_ij * p_i.``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from condcompat.errors import DimensionMismatchError, OrientationError
from condcompat.exact import RatMatrix, row_echelon
from condcompat.model import Cell, ConditionalMatrix, Orientation


@dataclass(frozen=True)
class DSystem:
    d: RatMatrix
    dims: tuple[int, int]

    def row_index(self, i: int, j: int) -> int:
        return i * self.dims[1] + j

    @property
    def row_cells(self) -> list[Cell]:
        i_max, j_max = self.dims
        return [(i, j) for i in range(i_max) for j in range(j_max)]


@dataclass(frozen=True)
class CSystem:
    c: RatMatrix
    dims: tuple[int, int]

    def position(self, i: int, j: int) -> int:
        """Index of ``p_ij`` in ``vec(P)`` (and of row (i, j))."""
        return i * self.dims[1] + j


def check_pair(a: ConditionalMatrix, b: ConditionalMatrix) -> tuple[int, int]:
    """Validate orientation, shape and completeness of a pair; return dims."""
    if a.orientation is not Orientation.GIVEN_COLUMN:
        raise OrientationError("A must be a given-column (P(X|Y)) matrix")
    if b.orientation is not Orientation.GIVEN_ROW:
        raise OrientationError("B must be a given-row (P(Y|X)) matrix")
    if a.dims != b.dims:
        raise DimensionMismatchError(f"A is {a.dims} but B is {b.dims}")
    a.require_complete()
    b.require_complete()
    return a.dims


def d_row(a: ConditionalMatrix, b: ConditionalMatrix, i: int, j: int) -> list[Fraction]:
    """Row (i, j) of D; ``a`` and ``b`` must be known in the cells it reads."""
    i_max = a.dims[0]
    a_ij = a[i, j]
    return [
        b[i, j] * (a_ij - 1) if s == i else a_ij * b[s, j]
        for s in range(i_max)
    ]


def build_D(a: ConditionalMatrix, b: ConditionalMatrix) -> DSystem:  # noqa: N802
    """The ``IJ x I`` matrix D with ``D eta = 0`` iff eta is a compatible marginal."""
    i_max, j_max = check_pair(a, b)
    rows = [tuple(d_row(a, b, i, j)) for i in range(i_max) for j in range(j_max)]
    return DSystem(RatMatrix(tuple(rows), i_max), (i_max, j_max))


def column_block(d: DSystem, j: int) -> RatMatrix:
    """The I rows of D that belong to column j of A."""
    i_max, _ = d.dims
    return d.d.select_rows(d.row_index(i, j) for i in range(i_max))


def reduce_D(d: DSystem) -> RatMatrix:  # noqa: N802
    """D_r: the nonzero rows of the reduced row echelon form of D."""
    reduced, rank, _ = row_echelon(d.d)
    return reduced.select_rows(range(rank))


def build_C(a: ConditionalMatrix, b: ConditionalMatrix) -> CSystem:  # noqa: N802
    """The ``IJ x IJ`` matrix C with ``C vec(P) = 0`` for every compatible joint."""
    i_max, j_max = check_pair(a, b)
    n = i_max * j_max
    zero = Fraction(0)
    rows = []
    for i in range(i_max):
        for j in range(j_max):
            a_ij, b_ij = a[i, j], b[i, j]
            row = [zero] * n
            for s in range(i_max):
                row[s * j_max + j] += a_ij
            for k in range(j_max):
                row[i * j_max + k] -= b_ij
            rows.append(tuple(row))
    return CSystem(RatMatrix(tuple(rows), n), (i_max, j_max))


def solution_projector(c: CSystem | RatMatrix) -> RatMatrix:
    """An idempotent M whose complement spans the solutions of ``C p = 0``.

    With R the reduced row echelon form of C and pivots ``p_k``, M has row
    ``p_k`` equal to row k of R and zeros elsewhere. Then ``M M = M``,
    ``C (I - M) = 0`` and ``(I - M) z`` sweeps the whole kernel as z varies.
    """
    matrix = c.c if isinstance(c, CSystem) else c
    if matrix.rows == 0:
        return RatMatrix.zeros(matrix.cols, matrix.cols)
    reduced, rank, pivots = row_echelon(matrix)
    n = matrix.cols
    zero_row = (Fraction(0),) * n
    rows = [zero_row] * n
    for k, p in enumerate(pivots):
        rows[p] = reduced.row(k)
    logger.debug(
        f"Projector for {matrix.rows}x{n} C: rank {rank}, nullity {n - rank}"
    )
    return RatMatrix(tuple(rows), n)
