"""Joint distributions and marginal pairs on an ``I x J`` grid."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from condcompat.errors import DimensionMismatchError, InvalidDistributionError
from condcompat.exact import RatMatrix, Scalar, Vector, to_rational, vector


def _check_stochastic(v: Vector, label: str) -> None:
    if any(x < 0 for x in v):
        raise InvalidDistributionError(f"{label} has a negative entry: {v}")
    total = sum(v, Fraction(0))
    if total != 1:
        raise InvalidDistributionError(f"{label} sums to {total}, not 1")


@dataclass(frozen=True)
class JointDistribution:
    """Cell probabilities ``p_ij``; nonnegative and summing to exactly one."""

    entries: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise DimensionMismatchError("a joint needs at least one cell")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise DimensionMismatchError("ragged rows in joint distribution")
        _check_stochastic(tuple(x for row in self.entries for x in row), "joint")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]]) -> JointDistribution:
        return cls(tuple(vector(r) for r in rows))

    @classmethod
    def uniform(cls, i_max: int, j_max: int) -> JointDistribution:
        cell = Fraction(1, i_max * j_max)
        return cls(tuple((cell,) * j_max for _ in range(i_max)))

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    def __getitem__(self, cell: tuple[int, int]) -> Fraction:
        i, j = cell
        return self.entries[i][j]

    def row_marginals(self) -> Vector:
        """``p_i.``, the distribution of X."""
        return tuple(sum(row, Fraction(0)) for row in self.entries)

    def column_marginals(self) -> Vector:
        """``p_.j``, the distribution of Y."""
        _, j_max = self.dims
        return tuple(
            sum((row[j] for row in self.entries), Fraction(0)) for j in range(j_max)
        )

    def vec(self) -> Vector:
        """``(p_11, p_12, ..., p_IJ)``, row-major."""
        return tuple(x for row in self.entries for x in row)

    def to_matrix(self) -> RatMatrix:
        return RatMatrix(self.entries)

    def permute(self, row_order: list[int], col_order: list[int]) -> JointDistribution:
        return JointDistribution(
            tuple(tuple(self.entries[i][j] for j in col_order) for i in row_order)
        )


@dataclass(frozen=True)
class MarginalPair:
    """The X-marginal ``eta`` (length I) and Y-marginal ``tau`` (length J)."""

    eta: Vector
    tau: Vector

    def __post_init__(self) -> None:
        _check_stochastic(self.eta, "eta")
        _check_stochastic(self.tau, "tau")

    @classmethod
    def of(cls, eta: Iterable[Scalar], tau: Iterable[Scalar]) -> MarginalPair:
        return cls(vector(eta), vector(tau))


def as_stochastic(values: Iterable[Scalar]) -> Vector:
    """Validate and return ``values`` as a probability vector."""
    v = tuple(to_rational(x) for x in values)
    _check_stochastic(v, "vector")
    return v
