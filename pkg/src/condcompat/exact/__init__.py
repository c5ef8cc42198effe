"""Exact rational arithmetic and deterministic linear algebra."""

from condcompat.exact.echelon import (
    EchelonForm,
    LinearSolution,
    null_space,
    rank,
    row_echelon,
    solve,
)
from condcompat.exact.matrix import (
    RatMatrix,
    Rational,
    Scalar,
    Vector,
    dot,
    to_rational,
    vector,
)

__all__ = [
    "EchelonForm",
    "LinearSolution",
    "RatMatrix",
    "Rational",
    "Scalar",
    "Vector",
    "dot",
    "null_space",
    "rank",
    "row_echelon",
    "solve",
    "to_rational",
    "vector",
]
