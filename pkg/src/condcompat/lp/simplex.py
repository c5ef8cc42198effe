"""Dense two-phase simplex over Fractions with Bland's anti-cycling rule.

Phase 1 minimizes the sum of artificial variables (added only to rows that
lack a natural slack basis); phase 2 maximizes the real objective from the
feasible basis phase 1 leaves behind. Entering column: lowest index with a
positive reduced cost. Leaving row: minimum ratio, ties to the lowest basic
variable index.
"""

from __future__ import annotations

from fractions import Fraction

from loguru import logger

from condcompat.constants import SIMPLEX_MAX_PIVOTS
from condcompat.errors import SimplexError
from condcompat.lp.program import (
    Infeasible,
    LinearProgram,
    LPResult,
    Optimal,
    Unbounded,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SimplexSolver:
    """Single-use solver; construct one per program."""

    def __init__(self, lp: LinearProgram) -> None:
        self.lp = lp
        self.pivots = 0
        self._tableau: list[list[Fraction]] = []
        self._basis: list[int] = []
        self._n_total = 0
        self._artificial_start = 0
        self._used = False

    # ------------------------------------------------------------------
    # Setup
    # ------------------------------------------------------------------

    def _build(self) -> None:
        lp = self.lp
        n = lp.n_vars
        eq_rows = list(lp.a_eq.data) if lp.a_eq is not None else []
        ub_rows = list(lp.a_ub.data) if lp.a_ub is not None else []
        n_slack = len(ub_rows)

        # (coefficients over originals + slacks, rhs, natural basis column or None)
        rows: list[tuple[list[Fraction], Fraction, int | None]] = []
        for row, rhs in zip(eq_rows, lp.b_eq):
            coeffs = list(row) + [_ZERO] * n_slack
            if rhs < 0:
                coeffs, rhs = [-x for x in coeffs], -rhs
            rows.append((coeffs, rhs, None))
        for k, (row, rhs) in enumerate(zip(ub_rows, lp.b_ub)):
            coeffs = list(row) + [_ZERO] * n_slack
            coeffs[n + k] = _ONE
            if rhs < 0:
                rows.append(([-x for x in coeffs], -rhs, None))
            else:
                rows.append((coeffs, rhs, n + k))

        self._artificial_start = n + n_slack
        n_art = sum(1 for _, _, basic in rows if basic is None)
        self._n_total = self._artificial_start + n_art

        art = self._artificial_start
        for coeffs, rhs, basic in rows:
            extra = [_ZERO] * n_art
            if basic is None:
                extra[art - self._artificial_start] = _ONE
                basic = art
                art += 1
            self._tableau.append(coeffs + extra + [rhs])
            self._basis.append(basic)

    # ------------------------------------------------------------------
    # Core iteration
    # ------------------------------------------------------------------

    def _reduced_costs(self, cost: list[Fraction], allowed: int) -> list[Fraction]:
        reduced = list(cost[:allowed])
        for row, basic in zip(self._tableau, self._basis):
            cb = cost[basic]
            if cb:
                for j in range(allowed):
                    if row[j]:
                        reduced[j] -= cb * row[j]
        return reduced

    def _pivot(self, r: int, c: int) -> None:
        self.pivots += 1
        if self.pivots > SIMPLEX_MAX_PIVOTS:
            raise SimplexError(f"exceeded {SIMPLEX_MAX_PIVOTS} pivots")
        prow = self._tableau[r]
        lead = prow[c]
        if lead != 1:
            prow = [x / lead for x in prow]
            self._tableau[r] = prow
        for k, row in enumerate(self._tableau):
            if k == r:
                continue
            factor = row[c]
            if factor:
                self._tableau[k] = [
                    x - factor * p if p else x for x, p in zip(row, prow)
                ]
        logger.trace(f"pivot row {r} col {c} (basis {self._basis[r]} -> {c})")
        self._basis[r] = c

    def _optimize(self, cost: list[Fraction], allowed: int) -> bool:
        """Run Bland's rule to optimality; False if unbounded."""
        while True:
            reduced = self._reduced_costs(cost, allowed)
            entering = next((j for j, rc in enumerate(reduced) if rc > 0), None)
            if entering is None:
                return True

            best: tuple[Fraction, int, int] | None = None
            for r, row in enumerate(self._tableau):
                coef = row[entering]
                if coef > 0:
                    key = (row[-1] / coef, self._basis[r], r)
                    if best is None or key < best:
                        best = key
            if best is None:
                return False
            self._pivot(best[2], entering)

    def _objective_value(self, cost: list[Fraction]) -> Fraction:
        return sum(
            (cost[basic] * row[-1] for row, basic in zip(self._tableau, self._basis)),
            _ZERO,
        )

    def _evict_artificials(self) -> None:
        """Pivot zero-level artificials out of the basis; drop redundant rows."""
        r = 0
        while r < len(self._tableau):
            if self._basis[r] >= self._artificial_start:
                row = self._tableau[r]
                col = next(
                    (j for j in range(self._artificial_start) if row[j] != 0), None
                )
                if col is None:
                    del self._tableau[r]
                    del self._basis[r]
                    continue
                self._pivot(r, col)
            r += 1

    # ------------------------------------------------------------------
    # Entry point
    # ------------------------------------------------------------------

    def solve(self) -> LPResult:
        if self._used:
            raise RuntimeError("SimplexSolver instances are single-use")
        self._used = True
        self._build()
        n = self.lp.n_vars

        if self._n_total > self._artificial_start:
            phase1 = [_ZERO] * self._artificial_start + [-_ONE] * (
                self._n_total - self._artificial_start
            )
            self._optimize(phase1, self._n_total)
            if self._objective_value(phase1) < 0:
                logger.debug(f"LP infeasible after phase 1 ({self.pivots} pivots)")
                return Infeasible()
            self._evict_artificials()

        cost = list(self.lp.objective) + [_ZERO] * (self._n_total - n)
        if not self._optimize(cost, self._artificial_start):
            logger.debug(f"LP unbounded ({self.pivots} pivots)")
            return Unbounded()

        point = [_ZERO] * n
        for row, basic in zip(self._tableau, self._basis):
            if basic < n:
                point[basic] = row[-1]
        value = sum((c * x for c, x in zip(self.lp.objective, point)), _ZERO)
        logger.debug(f"LP optimal value {value} after {self.pivots} pivots")
        return Optimal(value, tuple(point))


def solve(lp: LinearProgram) -> LPResult:
    """Solve ``lp`` exactly; see ``LinearProgram`` for the form."""
    return SimplexSolver(lp).solve()
