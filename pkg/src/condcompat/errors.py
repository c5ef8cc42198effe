"""Exception hierarchy shared by the library and the command layer."""

from __future__ import annotations


class CondCompatError(Exception):
    """Base class for every error raised by condcompat."""


class DimensionMismatchError(CondCompatError):
    """Two operands do not have compatible shapes."""


class OrientationError(CondCompatError):
    """A conditional matrix has the wrong orientation for the operation."""


class UnknownEntriesPresentError(CondCompatError):
    """An operation that needs a fully known matrix received unknown entries."""


class InvalidDistributionError(CondCompatError):
    """A joint or marginal is negative somewhere or does not sum to one."""


class ZeroMarginalError(CondCompatError):
    """A row or column of a joint sums to zero, so its conditional is undefined."""

    def __init__(self, index: int, axis: str) -> None:
        self.index = index
        self.axis = axis
        super().__init__(f"{axis} {index + 1} of the joint sums to zero")


class PatternMismatchError(CondCompatError):
    """Unknown entries are not in a pattern the chosen solver supports."""


class NoKnownColumnError(CondCompatError):
    """Every column of A holds an unknown, so eta cannot be pinned down."""


class UnknownsNotConfinedToOneColumnError(CondCompatError):
    """Unknown entries of A are spread over more than one column."""


class DivisionByZeroError(CondCompatError):
    """A closed-form completion divides by an entry that is zero."""


class InfeasibleFillError(CondCompatError):
    """A completed value falls outside [0, 1] or the solved eta is negative."""


class SingularSystemError(CondCompatError):
    """A square system that must have a unique solution is singular."""


class EntryOutOfRangeError(CondCompatError):
    """A perturbation would push an entry outside [0, 1]."""


class SimplexError(CondCompatError):
    """The simplex solver exceeded its pivot guard."""


class InstanceParseError(CondCompatError):
    """An instance or joint file could not be parsed.

    Carries the position of the defect: ``line``/``column`` for syntax errors,
    ``path`` (e.g. ``A[2][3]``) for structural ones.
    """

    def __init__(
        self,
        message: str,
        source: str = "<input>",
        line: int | None = None,
        column: int | None = None,
        path: str | None = None,
    ) -> None:
        self.source = source
        self.line = line
        self.column = column
        self.path = path
        self.reason = message
        super().__init__(self._format())

    def _format(self) -> str:
        where = self.source
        if self.line is not None:
            where += f":{self.line}"
            if self.column is not None:
                where += f":{self.column}"
        if self.path:
            where += f" at {self.path}"
        return f"{where}: {self.reason}"


class GridTooLargeError(CondCompatError):
    """The requested simplex grid has more points than the oracle will score."""
