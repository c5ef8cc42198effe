"""Linear programs in inequality/equality form, and their outcomes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from condcompat.errors import DimensionMismatchError
from condcompat.exact import RatMatrix, Vector


@dataclass(frozen=True)
class LinearProgram:
    """maximize ``objective . x``.

    Subject to ``a_eq x = b_eq``, ``a_ub x <= b_ub`` and ``x >= 0``.
    """

    objective: Vector
    a_eq: RatMatrix | None = None
    b_eq: Vector = field(default_factory=tuple)
    a_ub: RatMatrix | None = None
    b_ub: Vector = field(default_factory=tuple)

    def __post_init__(self) -> None:
        n = len(self.objective)
        blocks = (("eq", self.a_eq, self.b_eq), ("ub", self.a_ub, self.b_ub))
        for name, m, rhs in blocks:
            rows = m.rows if m is not None else 0
            if len(rhs) != rows:
                raise DimensionMismatchError(
                    f"{name}: {rows} constraint rows but {len(rhs)} right-hand sides"
                )
            if m is not None and m.rows and m.cols != n:
                raise DimensionMismatchError(
                    f"{name}: constraints have {m.cols} columns, objective has {n}"
                )

    @property
    def n_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class Optimal:
    value: Fraction
    point: Vector

    status = "optimal"


@dataclass(frozen=True)
class Infeasible:
    status = "infeasible"


@dataclass(frozen=True)
class Unbounded:
    status = "unbounded"


LPResult = Optimal | Infeasible | Unbounded
