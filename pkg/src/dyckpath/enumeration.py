"""Exhaustive generation of Dyck words and Catalan numbers."""

from __future__ import annotations

from math import comb

from dyckpath.core import DOWN, UP, DyckWord, Step
from dyckpath.errors import BoundExceeded

MAX_SEMILENGTH = 16


class EnumerationCursor:
    """Backtracking iterator over all Dyck words of semilength ``n``.

    Words come out in lexicographic order with ``UP < DOWN``, so the
    pyramid ``u^n d^n`` is first and ``(ud)^n`` is last.  The partial
    sequence is always a valid prefix: never below level 0 and never
    more than ``n`` ups.
    """

    def __init__(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"semilength must be non-negative, got {n}")
        if n > MAX_SEMILENGTH:
            raise BoundExceeded(f"semilength {n} exceeds the enumeration bound {MAX_SEMILENGTH}")
        self.n = n
        self.steps: list[Step] = []
        self.ups = 0
        self.downs = 0
        self._started = False
        self._done = False

    def __iter__(self) -> EnumerationCursor:
        return self

    def _fill(self) -> None:
        # Smallest completion of the current prefix: remaining ups, then downs.
        while len(self.steps) < 2 * self.n:
            if self.ups < self.n:
                self.steps.append(UP)
                self.ups += 1
            else:
                self.steps.append(DOWN)
                self.downs += 1

    def _advance(self) -> bool:
        while self.steps:
            step = self.steps.pop()
            if step is DOWN:
                self.downs -= 1
                continue
            self.ups -= 1
            if self.ups - self.downs >= 1:
                self.steps.append(DOWN)
                self.downs += 1
                self._fill()
                return True
        return False

    def __next__(self) -> DyckWord:
        if self._done:
            raise StopIteration
        if not self._started:
            self._started = True
            self._fill()
        elif not self._advance():
            self._done = True
            raise StopIteration
        return DyckWord(tuple(self.steps))


def enumerate_words(n: int) -> EnumerationCursor:
    """Every Dyck word of semilength ``n``, each exactly once."""
    return EnumerationCursor(n)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan needs n >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)
