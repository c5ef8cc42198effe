"""Turn a compatible pair into an incompatible one."""

from __future__ import annotations

from fractions import Fraction

from condcompat.errors import EntryOutOfRangeError
from condcompat.exact import Scalar, to_rational
from condcompat.model import ConditionalMatrix


def perturb_to_incompatible(
    a: ConditionalMatrix,
    b: ConditionalMatrix,
    delta: Scalar,
    column: int = 0,
    rows: tuple[int, int] | None = None,
) -> tuple[ConditionalMatrix, ConditionalMatrix]:
    """Move ``delta`` of mass between two entries of one column of A.

    By default the mass leaves the largest entry of ``column`` and goes to the
    smallest of the remaining ones, so column sums are preserved. ``rows``
    names ``(source, target)`` explicitly. For a strictly positive compatible
    pair and ``delta > 0`` the result has ``rank(D) = I``.

    Raises:
        EntryOutOfRangeError: an entry would leave [0, 1].
    """
    step = to_rational(delta)
    if step < 0:
        raise ValueError(f"delta must be nonnegative, got {step}")
    if step == 0:
        return a, b

    i_max = a.dims[0]
    entries = [a[i, column] for i in range(i_max)]
    if rows is None:
        source = max(range(i_max), key=lambda i: (entries[i], -i))
        target = min(
            (i for i in range(i_max) if i != source), key=lambda i: (entries[i], i)
        )
    else:
        source, target = rows

    lowered = entries[source] - step
    raised = entries[target] + step
    if lowered < 0 or raised > 1:
        raise EntryOutOfRangeError(
            f"moving {step} from a[{source + 1},{column + 1}] to "
            f"a[{target + 1},{column + 1}] leaves [0, 1]"
        )

    values = [list(r) for r in a.values]
    values[source][column] = lowered
    values[target][column] = raised
    perturbed = ConditionalMatrix(
        a.orientation,
        tuple(tuple(Fraction(x) for x in r) for r in values),
        a.unknown,
    )
    return perturbed, b
