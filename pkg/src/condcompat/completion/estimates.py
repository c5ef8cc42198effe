"""Epsilon-based estimates for a 3x2 A with two unknowns in column 2.

Rows (3,1) and (3,2) of D only read known entries. Setting both to ``eps``
and adding ``sum(eta) = 1`` gives a square system for eta; the unknown column
follows from row (1,2): ``alpha_12 * tau_2 - b_12 * eta_1 = eps``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from condcompat.compat import tau_from_eta
from condcompat.dsystem import d_row
from condcompat.errors import (
    DivisionByZeroError,
    OrientationError,
    PatternMismatchError,
    SingularSystemError,
)
from condcompat.exact import RatMatrix, Scalar, Vector, solve, to_rational
from condcompat.model import Cell, ConditionalMatrix, Orientation

ESTIMATE_PATTERN: frozenset[Cell] = frozenset({(0, 1), (1, 1)})

PATTERN_HELP = "3x2 A with a[1,2] and a[2,2] unknown, B fully known"


@dataclass(frozen=True)
class EpsilonEstimate:
    """Estimated marginal and unknown column at a chosen epsilon.

    ``diagnostics`` is empty when eta is a probability vector and both alphas
    lie in [0, 1].
    """

    epsilon: Fraction
    eta: Vector
    alpha: tuple[Fraction, Fraction]
    diagnostics: tuple[str, ...] = ()

    @property
    def is_feasible(self) -> bool:
        return not self.diagnostics


def epsilon_estimates(
    a: ConditionalMatrix, b: ConditionalMatrix, epsilon: Scalar
) -> EpsilonEstimate:
    """Solve the epsilon-equality system and estimate ``alpha_12``, ``alpha_22``.

    Raises:
        PatternMismatchError: ``a`` is not 3x2 with exactly the supported unknowns.
        SingularSystemError: the two equality rows and the sum row are dependent.
    """
    if a.orientation is not Orientation.GIVEN_COLUMN:
        raise OrientationError("A must be a given-column (P(X|Y)) matrix")
    if b.orientation is not Orientation.GIVEN_ROW:
        raise OrientationError("B must be a given-row (P(Y|X)) matrix")
    if a.dims != (3, 2) or b.dims != (3, 2) or a.unknown != ESTIMATE_PATTERN:
        raise PatternMismatchError(f"expected {PATTERN_HELP}")
    b.require_complete()
    eps = to_rational(epsilon)
    if eps < 0:
        raise ValueError(f"epsilon must be nonnegative, got {eps}")

    one = Fraction(1)
    system = RatMatrix(
        (tuple(d_row(a, b, 2, 0)), tuple(d_row(a, b, 2, 1)), (one, one, one)), 3
    )
    solution = solve(system, (eps, eps, one))
    if solution is None or not solution.is_unique:
        raise SingularSystemError(
            "rows (3,1), (3,2) of D and the sum row do not determine eta"
        )
    eta = solution.particular

    tau2 = tau_from_eta(b, eta)[1]
    if tau2 == 0:
        raise DivisionByZeroError("tau_2 = sum_s b_s2 * eta_s is zero")
    alpha12 = (eps + b[0, 1] * eta[0]) / tau2
    alpha22 = 1 - a[2, 1] - alpha12

    if eps == 0:
        _cross_check(a, b, eta)

    diagnostics: list[str] = []
    for i, x in enumerate(eta):
        if x < 0:
            diagnostics.append(f"eta_{i + 1} = {x} is negative")
    for name, x in (("alpha_12", alpha12), ("alpha_22", alpha22)):
        if not 0 <= x <= 1:
            diagnostics.append(f"{name} = {x} lies outside [0, 1]")
    if diagnostics:
        logger.warning(f"Epsilon estimate at eps={eps} is infeasible: {diagnostics}")
    else:
        logger.debug(f"Epsilon estimate at eps={eps}: eta={eta}, a12={alpha12}")
    return EpsilonEstimate(eps, eta, (alpha12, alpha22), tuple(diagnostics))


def _closed_form_eta(
    a: ConditionalMatrix,
    b: ConditionalMatrix,
    eps: Fraction,
    *,
    literal_d22: bool = False,
) -> Vector | None:
    """Eta from the elimination formulas, or None where they divide by zero.

    With ``eta_3 = 1 - eta_1 - eta_2`` substituted into rows (3,1) and (3,2)
    of D (coefficients ``p`` and ``q``)::

        d11 = (p2 - p3)(q1 - q3) - (q2 - q3)(p1 - p3)
        d12 = (q1 - q3) - (p1 - p3)
        d22 = q3 (p1 - p3) - p3 (q1 - q3)
        eta_2 = (eps d12 + d22) / d11
        eta_1 = (eps - p3 - (p2 - p3) eta_2) / (p1 - p3)

    ``literal_d22`` uses the variant with an extra ``q1 = a32 b12`` factor on
    the second term of d22, which only agrees when that factor is 1 or the
    term vanishes.
    """
    p1, p2, p3 = d_row(a, b, 2, 0)
    q1, q2, q3 = d_row(a, b, 2, 1)
    d11 = (p2 - p3) * (q1 - q3) - (q2 - q3) * (p1 - p3)
    d12 = (q1 - q3) - (p1 - p3)
    scale = q1 if literal_d22 else Fraction(1)
    d22 = q3 * (p1 - p3) - p3 * scale * (q1 - q3)
    if d11 == 0 or p1 == p3:
        return None
    eta2 = (eps * d12 + d22) / d11
    eta1 = (eps - p3 - (p2 - p3) * eta2) / (p1 - p3)
    return (eta1, eta2, 1 - eta1 - eta2)


def _cross_check(a: ConditionalMatrix, b: ConditionalMatrix, eta: Vector) -> None:
    closed = _closed_form_eta(a, b, Fraction(0))
    if closed is None:
        logger.debug("Closed form divides by zero at eps=0, exact solve kept")
    elif closed != eta:
        logger.warning(f"Closed form eta {closed} disagrees with exact solve {eta}")
    literal = _closed_form_eta(a, b, Fraction(0), literal_d22=True)
    if literal is not None and literal != eta:
        logger.debug(f"Literal d22 reading gives eta {literal}, exact solve kept")
