"""Completion of unknown entries under the assumption of compatibility."""

from condcompat.completion.column import (
    column_candidate,
    complete_column_in_A,
    complete_row_in_B,
)
from condcompat.completion.dispatch import SUPPORTED_PATTERNS, complete
from condcompat.completion.estimates import EpsilonEstimate, epsilon_estimates
from condcompat.completion.result import (
    CompletionResult,
    Diagnostics,
    ExactUnique,
    ForcedColumn,
    KnownColumnsInconsistent,
    Underdetermined,
)
from condcompat.completion.two_by_three import complete_A_and_B_2x3

__all__ = [
    "SUPPORTED_PATTERNS",
    "CompletionResult",
    "Diagnostics",
    "EpsilonEstimate",
    "ExactUnique",
    "ForcedColumn",
    "KnownColumnsInconsistent",
    "Underdetermined",
    "column_candidate",
    "complete",
    "complete_A_and_B_2x3",
    "complete_column_in_A",
    "complete_row_in_B",
    "epsilon_estimates",
]
