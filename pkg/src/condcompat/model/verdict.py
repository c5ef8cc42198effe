"""Outcomes of a compatibility decision.

Rank semantics follow the D system: ``rank == I`` always means incompatible,
``rank == I - 1`` with a sign-definite kernel gives a unique joint, and a
smaller rank leaves a family of joints.
"""

from __future__ import annotations

from dataclasses import dataclass

from condcompat.exact import Vector
from condcompat.model.joint import JointDistribution, MarginalPair


@dataclass(frozen=True)
class Incompatible:
    rank: int

    is_compatible = False
    label = "incompatible"


@dataclass(frozen=True)
class CompatibleUnique:
    """The single compatible joint and its marginals."""

    rank: int
    marginals: MarginalPair
    joint: JointDistribution

    is_compatible = True
    label = "compatible_unique"


@dataclass(frozen=True)
class CompatibleNonUnique:
    """Compatible, but the kernel of D has dimension > 1.

    ``marginals``/``joint`` hold one nonnegative representative when a
    feasibility solve found it.
    """

    rank: int
    kernel_basis: tuple[Vector, ...]
    marginals: MarginalPair | None = None
    joint: JointDistribution | None = None

    is_compatible = True
    label = "compatible_non_unique"


CompatibilityVerdict = Incompatible | CompatibleUnique | CompatibleNonUnique
