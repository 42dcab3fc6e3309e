"""Exception types raised across the package.

Every domain failure derives from :class:`DyckError`, itself a
``ValueError``, so callers can catch one type at the boundary.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from dyckpath.reconstruct import ValidationReport


class DyckError(ValueError):
    """Base class for invalid-input conditions."""


class ParseError(DyckError):
    """A word failed validation; ``position`` is the earliest offending index."""

    def __init__(self, message: str, position: int | None = None) -> None:
        super().__init__(message)
        self.position = position


class InvalidSymbol(ParseError):
    def __init__(self, position: int, symbol: str) -> None:
        super().__init__(f"invalid symbol {symbol!r} at position {position}", position)
        self.symbol = symbol


class PrefixUnderflow(ParseError):
    def __init__(self, position: int) -> None:
        super().__init__(f"path drops below level 0 at position {position}", position)


class Unbalanced(ParseError):
    def __init__(self, final_level: int) -> None:
        super().__init__(f"unbalanced word: final level is {final_level}, expected 0")
        self.final_level = final_level


class WordTooLong(ParseError):
    def __init__(self, length: int, limit: int) -> None:
        super().__init__(f"word length {length} exceeds limit {limit}")


class NotAPath(DyckError):
    """Fragments do not concatenate into a Dyck path."""


class EmptyWord(DyckError):
    """Operation undefined for the empty word."""


class InvalidAdjacency(DyckError):
    """Two neighbouring peaks or valleys cannot belong to the same path."""


class ParityViolation(DyckError):
    """A point whose coordinates differ in parity (or lies above y = x)."""


class _InvalidPointSet(DyckError):
    kind = "point"

    def __init__(self, report: ValidationReport) -> None:
        self.report = report
        self.index = report.violations[0].index if report.violations else None
        super().__init__(f"invalid {self.kind} set: " + "; ".join(str(v) for v in report.violations))


class InvalidPeakSet(_InvalidPointSet):
    kind = "peak"


class InvalidValleySet(_InvalidPointSet):
    kind = "valley"


class BoundExceeded(DyckError):
    """Enumeration requested above the supported semilength."""
