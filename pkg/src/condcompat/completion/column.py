"""Completion of unknown entries confined to one column of A (or one row of B).

With B fully known, every fully known column j of A contributes the I
equations ``a_ij * tau_j = b_ij * eta_i`` with ``tau_j = sum_s b_sj eta_s``.
Stacking them with ``sum(eta) = 1`` pins eta down; the target column is then
``alpha_il = b_il * eta_i / tau_l``.
"""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

from loguru import logger

from condcompat.compat import check_rank, tau_from_eta
from condcompat.completion.result import (
    CompletionResult,
    ExactUnique,
    ForcedColumn,
    KnownColumnsInconsistent,
    Underdetermined,
)
from condcompat.dsystem import d_row
from condcompat.errors import (
    DimensionMismatchError,
    InfeasibleFillError,
    NoKnownColumnError,
    OrientationError,
    PatternMismatchError,
    UnknownsNotConfinedToOneColumnError,
)
from condcompat.exact import LinearSolution, RatMatrix, Vector, solve
from condcompat.model import (
    Cell,
    CompatibleUnique,
    ConditionalMatrix,
    Orientation,
)


def _check_roles(a: ConditionalMatrix, b: ConditionalMatrix) -> None:
    if a.orientation is not Orientation.GIVEN_COLUMN:
        raise OrientationError("A must be a given-column (P(X|Y)) matrix")
    if b.orientation is not Orientation.GIVEN_ROW:
        raise OrientationError("B must be a given-row (P(Y|X)) matrix")
    if a.dims != b.dims:
        raise DimensionMismatchError(f"A is {a.dims} but B is {b.dims}")


def _solve_eta(
    a: ConditionalMatrix, b: ConditionalMatrix, columns: list[int]
) -> LinearSolution | None:
    i_max = a.dims[0]
    rows = [tuple(d_row(a, b, i, j)) for j in columns for i in range(i_max)]
    rows.append((Fraction(1),) * i_max)
    rhs = (Fraction(0),) * (len(rows) - 1) + (Fraction(1),)
    return solve(RatMatrix(tuple(rows), i_max), rhs)


def column_candidate(
    a: ConditionalMatrix, b: ConditionalMatrix, j: int
) -> Vector | None:
    """The eta that known column ``j`` forces on its own, if it forces one."""
    solution = _solve_eta(a, b, [j])
    if solution is None or not solution.is_unique:
        return None
    return solution.particular


def _format_eta(eta: Vector | None) -> str:
    if eta is None:
        return "no unique eta"
    return "eta = (" + ", ".join(str(x) for x in eta) + ")"


def _inconsistent(
    a: ConditionalMatrix, b: ConditionalMatrix, extra: tuple[str, ...] = ()
) -> CompletionResult:
    candidates = {j: column_candidate(a, b, j) for j in a.known_columns()}
    details = tuple(
        f"column {j + 1} forces {_format_eta(eta)}" for j, eta in candidates.items()
    )
    logger.info("Known columns of A are mutually inconsistent")
    return CompletionResult(
        a, b, None, KnownColumnsInconsistent(candidates, extra + details)
    )


def _target_column(a: ConditionalMatrix) -> int:
    columns = a.unknown_columns()
    if not columns:
        raise PatternMismatchError("A has no unknown entries to complete")
    if len(columns) > 1:
        listed = ", ".join(str(j + 1) for j in sorted(columns))
        raise UnknownsNotConfinedToOneColumnError(
            f"unknown entries of A span columns {listed}"
        )
    return columns.pop()


def complete_column_in_A(  # noqa: N802
    a: ConditionalMatrix,
    b: ConditionalMatrix,
    force_column: int | None = None,
) -> CompletionResult:
    """Fill the unknown column of A so that (A, B) becomes compatible.

    Args:
        a: Given-column matrix whose unknowns all sit in one column.
        b: Fully known given-row matrix.
        force_column: Solve eta from this known column alone (0-based) and
            fill from it even when the other known columns disagree.

    Returns:
        A ``CompletionResult``; its diagnostics say whether the fill is the
        unique compatible one, impossible, underdetermined or forced.
    """
    _check_roles(a, b)
    b.require_complete()
    target = _target_column(a)
    known = a.known_columns()
    if not known:
        raise NoKnownColumnError("every column of A holds an unknown entry")

    if force_column is not None:
        if force_column not in known:
            raise PatternMismatchError(
                f"column {force_column + 1} of A is not fully known"
            )
        used = [force_column]
    else:
        used = known
    logger.debug(f"Solving eta from known columns {[j + 1 for j in used]}")

    solution = _solve_eta(a, b, used)
    if solution is None:
        return _inconsistent(a, b)
    if not solution.is_unique:
        return CompletionResult(
            a,
            b,
            None,
            Underdetermined(
                len(solution.kernel), "the known columns leave eta undetermined"
            ),
        )

    eta = solution.particular
    if any(x < 0 for x in eta):
        raise InfeasibleFillError(f"solved eta has a negative entry: {eta}")

    tau_l = tau_from_eta(b, eta)[target]
    rows = [i for i in range(a.dims[0]) if not a.is_known(i, target)]
    if tau_l == 0:
        # Column l has zero mass, so any conditional fits it.
        if len(rows) > 1:
            return CompletionResult(
                a,
                b,
                eta,
                Underdetermined(len(rows) - 1, f"tau_{target + 1} is zero"),
            )
        remainder = 1 - sum(
            (a[i, target] for i in range(a.dims[0]) if i not in rows), Fraction(0)
        )
        filled: dict[Cell, Fraction] = {(rows[0], target): remainder}
    else:
        filled = {(i, target): b[i, target] * eta[i] / tau_l for i in rows}
        mismatched = [
            i
            for i in range(a.dims[0])
            if i not in rows and a[i, target] != b[i, target] * eta[i] / tau_l
        ]
        if mismatched:
            listed = ", ".join(str(i + 1) for i in mismatched)
            return _inconsistent(
                a,
                b,
                (f"known entries of column {target + 1} disagree in rows {listed}",),
            )

    for (i, j), value in filled.items():
        if not 0 <= value <= 1:
            raise InfeasibleFillError(f"filled a[{i + 1},{j + 1}] = {value}")

    filled_a = a.fill(filled)
    if force_column is not None:
        logger.warning(
            f"Filled column {target + 1} of A from column {force_column + 1} alone; "
            "the pair may be incompatible"
        )
        return CompletionResult(
            filled_a, b, eta, ForcedColumn(force_column), filled, {}, None
        )

    verdict = check_rank(filled_a, b)
    if not isinstance(verdict, CompatibleUnique) or verdict.marginals.eta != eta:
        logger.warning(f"Filled pair failed the rank check: {verdict.label}")
        rejected = _inconsistent(
            a, b, (f"rank check on the filled pair: {verdict.label}",)
        )
        return replace(
            rejected,
            filled_a=filled_a,
            eta=eta,
            filled_cells_a=filled,
            verdict=verdict,
        )
    logger.info(f"Column {target + 1} of A completed uniquely")
    return CompletionResult(filled_a, b, eta, ExactUnique(), filled, {}, verdict)


def complete_row_in_B(  # noqa: N802
    a: ConditionalMatrix,
    b: ConditionalMatrix,
    force_row: int | None = None,
) -> CompletionResult:
    """Fill unknowns confined to one row of B, with A fully known.

    Exchanging the roles of X and Y turns B into a given-column matrix, so the
    problem becomes ``complete_column_in_A`` on the transposed pair. The
    returned ``eta`` is the X-marginal of the original pair.
    """
    _check_roles(a, b)
    a.require_complete()
    try:
        swapped = complete_column_in_A(b.transpose(), a.transpose(), force_row)
    except UnknownsNotConfinedToOneColumnError as exc:
        raise UnknownsNotConfinedToOneColumnError(
            str(exc).replace("columns", "rows").replace("of A", "of B")
        ) from exc
    except NoKnownColumnError as exc:
        raise NoKnownColumnError("every row of B holds an unknown entry") from exc

    filled_b = swapped.filled_a.transpose()
    cells_b = {(i, j): v for (j, i), v in swapped.filled_cells_a.items()}
    diagnostics = swapped.diagnostics
    if isinstance(diagnostics, KnownColumnsInconsistent):
        # Candidates are Y-marginals, one per fully known row of B.
        return CompletionResult(a, b, None, diagnostics, {}, cells_b)
    if swapped.eta is None:
        return CompletionResult(a, filled_b, None, diagnostics, {}, cells_b)

    if isinstance(diagnostics, ExactUnique):
        verdict = check_rank(a, filled_b)
        eta = verdict.marginals.eta if isinstance(verdict, CompatibleUnique) else None
        return CompletionResult(a, filled_b, eta, diagnostics, {}, cells_b, verdict)
    return CompletionResult(a, filled_b, None, diagnostics, {}, cells_b)
