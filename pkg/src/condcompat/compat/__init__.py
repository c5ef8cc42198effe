"""Compatibility decisions and joint/marginal recovery."""

from condcompat.compat.cross_ratio import (
    Agree,
    CrossProductResult,
    Disagree,
    Inapplicable,
    Minor,
    cross_product_check,
)
from condcompat.compat.epsilon import EpsilonResult, epsilon_program, min_epsilon
from condcompat.compat.lp_check import (
    check_lp,
    feasibility_program,
    nonnegative_kernel_vector,
)
from condcompat.compat.rank import check_rank
from condcompat.compat.recovery import recover_joint, tau_from_eta

__all__ = [
    "Agree",
    "CrossProductResult",
    "Disagree",
    "EpsilonResult",
    "Inapplicable",
    "Minor",
    "check_lp",
    "check_rank",
    "cross_product_check",
    "epsilon_program",
    "feasibility_program",
    "min_epsilon",
    "nonnegative_kernel_vector",
    "recover_joint",
    "tau_from_eta",
]
