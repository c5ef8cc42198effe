"""Conditional probability matrices with first-class unknown entries."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from condcompat.errors import DimensionMismatchError, UnknownEntriesPresentError
from condcompat.exact import RatMatrix, Scalar, to_rational

Cell = tuple[int, int]


class Orientation(str, Enum):
    """Which variable the matrix conditions on.

    ``GIVEN_COLUMN`` is the A-type matrix, ``a_ij = P(X=i | Y=j)``, whose columns
    sum to one. ``GIVEN_ROW`` is the B-type matrix, ``b_ij = P(Y=j | X=i)``,
    whose rows sum to one.
    """

    GIVEN_COLUMN = "given_column"
    GIVEN_ROW = "given_row"

    @property
    def flipped(self) -> Orientation:
        if self is Orientation.GIVEN_COLUMN:
            return Orientation.GIVEN_ROW
        return Orientation.GIVEN_COLUMN


@dataclass(frozen=True)
class ConditionalMatrix:
    """An ``I x J`` conditional matrix.

    Unknown cells are listed in ``unknown``; their slot in ``values`` holds 0 and
    is never read through the public accessors.
    """

    orientation: Orientation
    values: tuple[tuple[Fraction, ...], ...]
    unknown: frozenset[Cell] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not self.values or not self.values[0]:
            raise DimensionMismatchError("a conditional matrix needs at least one cell")
        width = len(self.values[0])
        if any(len(row) != width for row in self.values):
            raise DimensionMismatchError("ragged rows in conditional matrix")
        i_max, j_max = self.dims
        for i, j in self.unknown:
            if not (0 <= i < i_max and 0 <= j < j_max):
                raise DimensionMismatchError(
                    f"unknown cell {(i, j)} outside {self.dims}"
                )

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(
        cls,
        orientation: Orientation,
        rows: Iterable[Iterable[Scalar | None]],
    ) -> ConditionalMatrix:
        """Build from nested rows; ``None`` or ``"?"`` marks an unknown cell."""
        values: list[tuple[Fraction, ...]] = []
        unknown: set[Cell] = set()
        for i, row in enumerate(rows):
            out: list[Fraction] = []
            for j, x in enumerate(row):
                if x is None or x == "?":
                    unknown.add((i, j))
                    out.append(Fraction(0))
                else:
                    out.append(to_rational(x))
            values.append(tuple(out))
        return cls(orientation, tuple(values), frozenset(unknown))

    @classmethod
    def given_column(cls, rows: Iterable[Iterable[Scalar | None]]) -> ConditionalMatrix:
        """An A-type matrix, ``P(X | Y)``."""
        return cls.from_rows(Orientation.GIVEN_COLUMN, rows)

    @classmethod
    def given_row(cls, rows: Iterable[Iterable[Scalar | None]]) -> ConditionalMatrix:
        """A B-type matrix, ``P(Y | X)``."""
        return cls.from_rows(Orientation.GIVEN_ROW, rows)

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.values), len(self.values[0])

    @property
    def is_complete(self) -> bool:
        return not self.unknown

    def is_known(self, i: int, j: int) -> bool:
        return (i, j) not in self.unknown

    def get(self, i: int, j: int) -> Fraction | None:
        """The entry at (i, j), or ``None`` if it is unknown."""
        if (i, j) in self.unknown:
            return None
        return self.values[i][j]

    def __getitem__(self, cell: Cell) -> Fraction:
        if cell in self.unknown:
            raise UnknownEntriesPresentError(f"entry {cell} is unknown")
        i, j = cell
        return self.values[i][j]

    def unknown_columns(self) -> set[int]:
        return {j for _, j in self.unknown}

    def unknown_rows(self) -> set[int]:
        return {i for i, _ in self.unknown}

    def known_columns(self) -> list[int]:
        missing = self.unknown_columns()
        return [j for j in range(self.dims[1]) if j not in missing]

    def rows(self) -> list[list[Fraction | None]]:
        i_max, j_max = self.dims
        return [[self.get(i, j) for j in range(j_max)] for i in range(i_max)]

    def to_matrix(self) -> RatMatrix:
        """The entries as a RatMatrix; the matrix must be fully known."""
        self.require_complete()
        return RatMatrix(self.values)

    def require_complete(self) -> None:
        if self.unknown:
            cells = ", ".join(f"({i + 1},{j + 1})" for i, j in sorted(self.unknown))
            raise UnknownEntriesPresentError(f"unknown entries present at {cells}")

    # ------------------------------------------------------------------
    # Derivation
    # ------------------------------------------------------------------

    def fill(self, filled: Mapping[Cell, Fraction]) -> ConditionalMatrix:
        """Replace unknown cells with the given values."""
        rows = [list(r) for r in self.values]
        for (i, j), value in filled.items():
            if (i, j) not in self.unknown:
                raise ValueError(f"cell {(i, j)} is not unknown")
            rows[i][j] = to_rational(value)
        return ConditionalMatrix(
            self.orientation,
            tuple(tuple(r) for r in rows),
            self.unknown - frozenset(filled),
        )

    def mask(self, cells: Iterable[Cell]) -> ConditionalMatrix:
        """Mark the given cells unknown."""
        hidden = frozenset(cells)
        rows = [list(r) for r in self.values]
        for i, j in hidden:
            rows[i][j] = Fraction(0)
        return ConditionalMatrix(
            self.orientation, tuple(tuple(r) for r in rows), self.unknown | hidden
        )

    def transpose(self) -> ConditionalMatrix:
        """The same conditional seen with the roles of X and Y exchanged."""
        i_max, j_max = self.dims
        return ConditionalMatrix(
            self.orientation.flipped,
            tuple(tuple(self.values[i][j] for i in range(i_max)) for j in range(j_max)),
            frozenset((j, i) for i, j in self.unknown),
        )

    def permute(
        self,
        row_order: Iterable[int] | None = None,
        col_order: Iterable[int] | None = None,
    ) -> ConditionalMatrix:
        """Reorder rows and/or columns (new row k is old row ``row_order[k]``)."""
        i_max, j_max = self.dims
        rows = list(row_order) if row_order is not None else list(range(i_max))
        cols = list(col_order) if col_order is not None else list(range(j_max))
        if sorted(rows) != list(range(i_max)) or sorted(cols) != list(range(j_max)):
            raise ValueError("orders must be permutations")
        new_of_row = {old: new for new, old in enumerate(rows)}
        new_of_col = {old: new for new, old in enumerate(cols)}
        return ConditionalMatrix(
            self.orientation,
            tuple(tuple(self.values[i][j] for j in cols) for i in rows),
            frozenset((new_of_row[i], new_of_col[j]) for i, j in self.unknown),
        )

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join("?" if x is None else str(x) for x in row) + "]"
            for row in self.rows()
        )
