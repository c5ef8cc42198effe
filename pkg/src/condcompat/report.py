"""Command output in human-readable text or line-oriented ``key=value`` form.

Values are always printed as exact fractions; the text form adds a decimal
rendering in parentheses, the kv form a separate ``<key>.decimal`` line.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from condcompat.constants import DEFAULT_DECIMAL_PLACES, DEFAULT_FORMAT


def decimal(x: Fraction, places: int = DEFAULT_DECIMAL_PLACES) -> str:
    return f"{float(x):.{places}f}"


def _exact(x: Fraction | None) -> str:
    return "?" if x is None else str(x)


class Report:
    """Accumulates report lines and renders them in one of two formats."""

    def __init__(
        self, fmt: str = DEFAULT_FORMAT, decimal_places: int = DEFAULT_DECIMAL_PLACES
    ) -> None:
        self.fmt = fmt
        self.places = decimal_places
        self._text: list[str] = []
        self._kv: list[str] = []
        self.errors: list[str] = []
        self.document: str | None = None

    @property
    def is_kv(self) -> bool:
        return self.fmt == "kv"

    def field(self, key: str, text: object) -> None:
        self._text.append(f"{key}: {text}")
        self._kv.append(f"{key}={text}")

    def value(self, key: str, x: Fraction) -> None:
        self._text.append(f"{key}: {x} ({decimal(x, self.places)})")
        self._kv.append(f"{key}={x}")
        self._kv.append(f"{key}.decimal={decimal(x, self.places)}")

    def vector(self, key: str, v: Sequence[Fraction]) -> None:
        exact = ", ".join(str(x) for x in v)
        approx = ", ".join(decimal(x, self.places) for x in v)
        self._text.append(f"{key}: ({exact}) ≈ ({approx})")
        self._kv.append(f"{key}={','.join(str(x) for x in v)}")
        self._kv.append(f"{key}.decimal={','.join(decimal(x, self.places) for x in v)}")

    def matrix(self, key: str, rows: Sequence[Sequence[Fraction | None]]) -> None:
        self._text.append(f"{key}:")
        for i, row in enumerate(rows):
            self._text.append("  [" + ", ".join(_exact(x) for x in row) + "]")
            self._kv.append(f"{key}[{i + 1}]={','.join(_exact(x) for x in row)}")

    def note(self, text: str) -> None:
        """A line for human readers; kv output records it under ``note``."""
        self._text.append(text)
        self._kv.append(f"note={text}")

    def error(self, message: str) -> None:
        self.errors.append(message)

    def attach(self, document: str) -> None:
        """Emit ``document`` verbatim instead of the accumulated lines."""
        self.document = document

    def render(self) -> str:
        if self.document is not None:
            return self.document
        lines = self._kv if self.is_kv else self._text
        return "\n".join(lines) + ("\n" if lines else "")

    def render_errors(self) -> str:
        prefix = "error=" if self.is_kv else "error: "
        return "".join(f"{prefix}{e}\n" for e in self.errors)
