"""The rank criterion on D.

rank(D) = I: only the null vector solves ``D eta = 0``, so the pair is
incompatible. rank(D) = I - 1: the kernel is one-dimensional and, when it is
sign-definite, gives the unique compatible eta. rank(D) < I - 1: a family of
solutions; compatible iff a nonnegative kernel vector exists.
"""

from __future__ import annotations

from loguru import logger

from condcompat.compat.lp_check import nonnegative_kernel_vector
from condcompat.compat.recovery import non_unique_verdict, normalize, unique_verdict
from condcompat.dsystem import build_D
from condcompat.exact import null_space, row_echelon
from condcompat.model import CompatibilityVerdict, ConditionalMatrix, Incompatible


def check_rank(a: ConditionalMatrix, b: ConditionalMatrix) -> CompatibilityVerdict:
    """Decide compatibility from rank(D) and its kernel."""
    d = build_D(a, b)
    i_max = d.dims[0]
    rank = row_echelon(d.d).rank
    logger.debug(f"check_rank: rank(D) = {rank} for I = {i_max}")

    if rank == i_max:
        return Incompatible(rank)

    basis = null_space(d.d)
    if rank == i_max - 1:
        eta = normalize(basis[0])
        if eta is None:
            logger.debug(f"check_rank: kernel vector {basis[0]} is not sign-definite")
            return Incompatible(rank)
        return unique_verdict(b, rank, eta)

    eta = nonnegative_kernel_vector(d)
    if eta is None:
        return Incompatible(rank)
    return non_unique_verdict(b, rank, basis, eta)
