"""Independent generators and brute-force verifiers."""

from condcompat.oracle.generator import Generator, random_joint
from condcompat.oracle.grid import (
    compositions,
    fit_grid_steps,
    grid_min_violation,
    grid_size,
    violation,
)
from condcompat.oracle.perturb import perturb_to_incompatible

__all__ = [
    "Generator",
    "compositions",
    "fit_grid_steps",
    "grid_min_violation",
    "grid_size",
    "perturb_to_incompatible",
    "random_joint",
    "violation",
]
