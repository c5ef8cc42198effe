"""Pick the completion solver that fits a pair's unknown pattern."""

from __future__ import annotations

from loguru import logger

from condcompat.completion import two_by_three
from condcompat.completion.column import complete_column_in_A, complete_row_in_B
from condcompat.completion.result import CompletionResult
from condcompat.errors import PatternMismatchError
from condcompat.model import ConditionalMatrix

SUPPORTED_PATTERNS = (
    "unknowns confined to one column of A, B fully known, at least one other "
    "column of A fully known",
    "unknowns confined to one row of B, A fully known, at least one other row "
    "of B fully known",
    two_by_three.PATTERN_HELP,
)


def complete(
    a: ConditionalMatrix,
    b: ConditionalMatrix,
    force_column: int | None = None,
) -> CompletionResult:
    if a.is_complete and b.is_complete:
        raise PatternMismatchError("neither A nor B has unknown entries")

    if not a.is_complete and b.is_complete:
        logger.debug("Completing one column of A")
        return complete_column_in_A(a, b, force_column)

    if force_column is not None:
        raise PatternMismatchError("a forced column only applies to unknowns in A")

    if a.is_complete:
        logger.debug("Completing one row of B")
        return complete_row_in_B(a, b)

    if two_by_three.matches_pattern(a, b):
        logger.debug("Completing the 2x3 pattern in closed form")
        return two_by_three.complete_A_and_B_2x3(a, b)

    raise PatternMismatchError("unknowns in both A and B outside the 2x3 pattern")
