"""Completion outcomes."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from condcompat.exact import Vector
from condcompat.model import Cell, CompatibilityVerdict, ConditionalMatrix


@dataclass(frozen=True)
class ExactUnique:
    """The unknowns have exactly one compatible completion."""

    label = "exact_unique"


@dataclass(frozen=True)
class KnownColumnsInconsistent:
    """The known entries admit no common eta, so no exact completion exists.

    ``candidates`` maps each fully known column (0-based) to the eta it forces
    on its own, or ``None`` when that column alone does not pin eta down.
    """

    candidates: Mapping[int, Vector | None]
    details: tuple[str, ...] = ()

    label = "known_columns_inconsistent"


@dataclass(frozen=True)
class Underdetermined:
    free_parameters: int
    reason: str = ""

    label = "underdetermined"


@dataclass(frozen=True)
class ForcedColumn:
    """Filled from one known column's eta; the pair is generally incompatible."""

    column: int

    label = "forced_column"


Diagnostics = ExactUnique | KnownColumnsInconsistent | Underdetermined | ForcedColumn


@dataclass(frozen=True)
class CompletionResult:
    filled_a: ConditionalMatrix
    filled_b: ConditionalMatrix
    eta: Vector | None
    diagnostics: Diagnostics
    filled_cells_a: Mapping[Cell, Fraction] = field(default_factory=dict)
    filled_cells_b: Mapping[Cell, Fraction] = field(default_factory=dict)
    verdict: CompatibilityVerdict | None = None

    @property
    def is_exact(self) -> bool:
        return isinstance(self.diagnostics, ExactUnique)
