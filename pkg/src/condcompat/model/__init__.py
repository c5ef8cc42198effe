"""Domain types: conditional matrices, joints, marginals and verdicts."""

from condcompat.model.conditional import Cell, ConditionalMatrix, Orientation
from condcompat.model.derive import derive_conditionals
from condcompat.model.joint import JointDistribution, MarginalPair, as_stochastic
from condcompat.model.validation import Violation, validate, zero_pattern_warnings
from condcompat.model.verdict import (
    CompatibilityVerdict,
    CompatibleNonUnique,
    CompatibleUnique,
    Incompatible,
)

__all__ = [
    "Cell",
    "CompatibilityVerdict",
    "CompatibleNonUnique",
    "CompatibleUnique",
    "ConditionalMatrix",
    "Incompatible",
    "JointDistribution",
    "MarginalPair",
    "Orientation",
    "Violation",
    "as_stochastic",
    "derive_conditionals",
    "validate",
    "zero_pattern_warnings",
]
