"""Seeded random joints for property suites and the ``gen`` command."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from loguru import logger

from condcompat.constants import DEFAULT_MAX_CELL_WEIGHT, FLOOR_SCALE
from condcompat.errors import DimensionMismatchError
from condcompat.model import JointDistribution


@dataclass
class Generator:
    """A reproducible source of random instances.

    Two generators built with the same seed and parameters produce the same
    sequence of outputs. A generator is stateful and single-owner.
    """

    seed: int
    dims: tuple[int, int]
    floor: Fraction | None = None
    max_weight: int = DEFAULT_MAX_CELL_WEIGHT
    _rng: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self) -> None:
        i_max, j_max = self.dims
        if i_max < 2 or j_max < 2:
            raise DimensionMismatchError(
                f"dims must be at least (2, 2), got {self.dims}"
            )
        if self.floor is None:
            self.floor = Fraction(1, FLOOR_SCALE * i_max * j_max)
        if not 0 < self.floor * i_max * j_max < 1:
            raise ValueError(f"floor {self.floor} leaves no mass to distribute")
        if self.max_weight < 1:
            raise ValueError("max_weight must be positive")
        self._rng = np.random.default_rng(self.seed)

    def integers(self, low: int, high: int, size: int) -> list[int]:
        """``size`` integers drawn uniformly from ``[low, high]`` inclusive."""
        draws = self._rng.integers(low, high, size=size, endpoint=True)
        return [int(x) for x in draws]

    def permutation(self, n: int) -> list[int]:
        return [int(x) for x in self._rng.permutation(n)]


def random_joint(g: Generator) -> JointDistribution:
    """A strictly positive joint with every cell at least ``g.floor``.

    Integer weights ``n_ij`` in ``[1, max_weight]`` are normalized and mixed
    with the floor: ``p_ij = f + (1 - I*J*f) * n_ij / sum(n)``.
    """
    i_max, j_max = g.dims
    assert g.floor is not None
    weights = g.integers(1, g.max_weight, i_max * j_max)
    total = sum(weights)
    spread = 1 - g.floor * i_max * j_max
    cells = [g.floor + spread * Fraction(w, total) for w in weights]
    logger.trace(f"random_joint seed={g.seed} dims={g.dims} weights={weights}")
    return JointDistribution(
        tuple(tuple(cells[i * j_max : (i + 1) * j_max]) for i in range(i_max))
    )
