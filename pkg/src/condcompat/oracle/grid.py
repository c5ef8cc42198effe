"""Brute-force upper bound on the minimal epsilon over a simplex grid.

Independent of the D-matrix builder: the violation at eta is
``max_ij |a_ij * tau_j - b_ij * eta_i|`` computed straight from A and B.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from fractions import Fraction

import numpy as np
from loguru import logger

from condcompat.constants import GRID_EXACT_CANDIDATES, GRID_MAX_POINTS
from condcompat.errors import GridTooLargeError
from condcompat.model import ConditionalMatrix

_CHUNK = 200_000


def compositions(steps: int, parts: int) -> np.ndarray:
    """Every vector of ``parts`` nonnegative integers summing to ``steps``."""
    rows = np.zeros((1, 0), dtype=np.int64)
    remaining = np.array([steps], dtype=np.int64)
    for _ in range(parts - 1):
        counts = remaining + 1
        owner = np.repeat(np.arange(len(rows)), counts)
        starts = np.repeat(np.cumsum(counts) - counts, counts)
        k = np.arange(int(counts.sum()), dtype=np.int64) - starts
        rows = np.column_stack([rows[owner], k])
        remaining = remaining[owner] - k
    return np.column_stack([rows, remaining])


def grid_size(steps: int, parts: int) -> int:
    """Number of points on the ``steps``-grid of the ``parts``-simplex."""
    return math.comb(steps + parts - 1, parts - 1)


def fit_grid_steps(steps: int, parts: int, budget: int = GRID_MAX_POINTS) -> int:
    """Largest step count up to ``steps`` whose grid has at most ``budget`` points."""
    while steps > 1 and grid_size(steps, parts) > budget:
        steps -= 1
    return steps


def _blocks(steps: int, parts: int) -> Iterator[np.ndarray]:
    """The grid in slices that share a leading coordinate."""
    if parts == 1:
        yield compositions(steps, 1)
        return
    for lead in range(steps + 1):
        tail = compositions(steps - lead, parts - 1)
        yield np.column_stack([np.full(len(tail), lead, dtype=np.int64), tail])


def violation(
    a: ConditionalMatrix, b: ConditionalMatrix, eta: list[Fraction]
) -> Fraction:
    """Exact ``max_ij |a_ij * tau_j - b_ij * eta_i|``."""
    i_max, j_max = a.dims
    tau = [
        sum((b[s, j] * eta[s] for s in range(i_max)), Fraction(0))
        for j in range(j_max)
    ]
    return max(
        abs(a[i, j] * tau[j] - b[i, j] * eta[i])
        for i in range(i_max)
        for j in range(j_max)
    )


def _float_violations(a_f: np.ndarray, b_f: np.ndarray, eta: np.ndarray) -> np.ndarray:
    tau = eta @ b_f
    terms = tau[:, None, :] * a_f[None, :, :] - eta[:, :, None] * b_f[None, :, :]
    return np.abs(terms).max(axis=(1, 2))


def grid_min_violation(
    a: ConditionalMatrix, b: ConditionalMatrix, steps: int
) -> Fraction:
    """Minimum exact violation over ``{eta : eta_i = k_i / steps}``.

    Grid points are ranked in float64 and the best few are re-evaluated
    exactly, so the result is the exact violation of some grid point and hence
    an exact upper bound on the minimal epsilon. The grid is streamed, so
    memory stays bounded by one leading-coordinate slice.

    Raises:
        GridTooLargeError: the grid has more than ``GRID_MAX_POINTS`` points.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    a.require_complete()
    b.require_complete()
    parts = a.dims[0]
    size = grid_size(steps, parts)
    if size > GRID_MAX_POINTS:
        raise GridTooLargeError(
            f"{size} grid points at steps={steps} for I={parts} exceed the limit "
            f"of {GRID_MAX_POINTS}; use at most {fit_grid_steps(steps, parts)} steps"
        )
    a_f = np.array([[float(x) for x in row] for row in a.values])
    b_f = np.array([[float(x) for x in row] for row in b.values])

    best_points = np.zeros((0, parts), dtype=np.int64)
    best_scores = np.zeros(0)
    for block in _blocks(steps, parts):
        for k in range(0, len(block), _CHUNK):
            chunk = block[k : k + _CHUNK]
            points = np.concatenate([best_points, chunk])
            scores = np.concatenate(
                [best_scores, _float_violations(a_f, b_f, chunk / steps)]
            )
            if len(scores) > GRID_EXACT_CANDIDATES:
                keep = np.argpartition(scores, GRID_EXACT_CANDIDATES - 1)
                keep = keep[:GRID_EXACT_CANDIDATES]
                points, scores = points[keep], scores[keep]
            best_points, best_scores = points, scores

    value = min(
        violation(a, b, [Fraction(int(k), steps) for k in row]) for row in best_points
    )
    logger.debug(f"grid_min_violation: {size} points at steps={steps}, min {value}")
    return value
