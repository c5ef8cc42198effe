"""Immutable dense matrices of exact rationals.

Every scalar in condcompat is a ``fractions.Fraction``; Python's integers are
arbitrary precision, so repeated elimination never overflows.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from condcompat.errors import DimensionMismatchError

Rational = Fraction
Vector = tuple[Fraction, ...]
Scalar = Fraction | int | str


def to_rational(value: Scalar) -> Fraction:
    """Coerce an int, Fraction or fraction/decimal string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    return Fraction(value)


def vector(values: Iterable[Scalar]) -> Vector:
    return tuple(to_rational(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatchError(f"dot of lengths {len(u)} and {len(v)}")
    return sum((x * y for x, y in zip(u, v) if x and y), Fraction(0))


@dataclass(frozen=True)
class RatMatrix:
    """A ``rows x cols`` grid of Fractions, stored row-major as nested tuples."""

    data: tuple[Vector, ...]
    n_cols: int = 0

    def __post_init__(self) -> None:
        width = len(self.data[0]) if self.data else self.n_cols
        if any(len(row) != width for row in self.data):
            raise DimensionMismatchError("ragged rows in RatMatrix")
        object.__setattr__(self, "n_cols", width)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]], cols: int = 0) -> RatMatrix:
        return cls(tuple(vector(r) for r in rows), cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        zero = Fraction(0)
        return cls(tuple((zero,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(
            tuple(
                tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
                for i in range(n)
            ),
            n,
        )

    @classmethod
    def column(cls, values: Iterable[Scalar]) -> RatMatrix:
        """A ``n x 1`` column vector."""
        return cls(tuple((v,) for v in vector(values)), 1)

    # ------------------------------------------------------------------
    # Shape and access
    # ------------------------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return self.n_cols

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Vector:
        """All entries, row-major; length is ``rows * cols``."""
        return tuple(x for row in self.data for x in row)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def transpose(self) -> RatMatrix:
        return RatMatrix(tuple(self.col(j) for j in range(self.cols)), self.rows)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product ``self @ v``."""
        if len(v) != self.cols:
            raise DimensionMismatchError(
                f"cannot apply {self.rows}x{self.cols} matrix to length-{len(v)} vector"
            )
        return tuple(dot(row, v) for row in self.data)

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        zero = Fraction(0)
        out = []
        for row in self.data:
            acc = [zero] * other.cols
            for k, x in enumerate(row):
                if not x:
                    continue
                for j, y in enumerate(other.data[k]):
                    if y:
                        acc[j] += x * y
            out.append(tuple(acc))
        return RatMatrix(tuple(out), other.cols)

    def _elementwise(self, other: RatMatrix, sign: int) -> RatMatrix:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes {self.shape} and {other.shape}")
        return RatMatrix(
            tuple(
                tuple(x + sign * y for x, y in zip(r, s))
                for r, s in zip(self.data, other.data)
            ),
            self.cols,
        )

    def __add__(self, other: RatMatrix) -> RatMatrix:
        return self._elementwise(other, 1)

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return self._elementwise(other, -1)

    def scale(self, factor: Scalar) -> RatMatrix:
        f = to_rational(factor)
        rows = tuple(tuple(x * f for x in row) for row in self.data)
        return RatMatrix(rows, self.cols)

    def permute_rows(self, order: Sequence[int]) -> RatMatrix:
        if sorted(order) != list(range(self.rows)):
            raise ValueError("order must be a permutation of the row indices")
        return RatMatrix(tuple(self.data[i] for i in order), self.cols)

    def select_rows(self, indices: Iterable[int]) -> RatMatrix:
        return RatMatrix(tuple(self.data[i] for i in indices), self.cols)

    def stack(self, other: RatMatrix) -> RatMatrix:
        """Rows of ``self`` followed by rows of ``other``."""
        if self.cols != other.cols:
            raise DimensionMismatchError(f"cannot stack {self.shape} on {other.shape}")
        return RatMatrix(self.data + other.data, self.cols)

    def __str__(self) -> str:
        lines = ("[" + ", ".join(str(x) for x in row) + "]" for row in self.data)
        return "\n".join(lines)
