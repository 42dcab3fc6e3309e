"""Dyck words: validation, level profile, peaks, valleys and prime fragments.

A Dyck word of semilength ``n`` is a sequence of ``n`` up steps and ``n``
down steps in which no prefix holds more downs than ups.  Points on the
path are ``(x, y)`` pairs where ``x`` is the step index and ``y`` the level.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from dyckpath.errors import (
    EmptyWord,
    InvalidSymbol,
    NotAPath,
    PrefixUnderflow,
    Unbalanced,
    WordTooLong,
)

MAX_WORD_LENGTH = 2**62


class Step(Enum):
    UP = "u"
    DOWN = "d"

    def __repr__(self) -> str:
        return f"Step.{self.name}"


UP = Step.UP
DOWN = Step.DOWN

DEFAULT_ALPHABET: Mapping[str, Step] = {"u": UP, "d": DOWN}


class LatticePoint(NamedTuple):
    """A node ``(x, y)`` of the standard grid: step index and level."""

    x: int
    y: int

    @property
    def reachable(self) -> bool:
        """True if some Dyck path can pass through this node."""
        return 0 <= self.y <= self.x and (self.x - self.y) % 2 == 0


def _scan(steps: Iterable[Step]) -> int:
    """Return the final level, raising on the first prefix that dips below 0."""
    level = 0
    for i, step in enumerate(steps):
        if step is UP:
            level += 1
        elif step is DOWN:
            level -= 1
            if level < 0:
                raise PrefixUnderflow(i)
        else:
            raise InvalidSymbol(i, repr(step))
    return level


@dataclass(frozen=True)
class DyckWord:
    """An immutable, validated Dyck word.

    Construct from text with :func:`parse_word`; the constructor itself
    takes a sequence of :class:`Step` values and checks both balance
    conditions.
    """

    steps: tuple[Step, ...] = ()

    def __post_init__(self) -> None:
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        if len(steps) > MAX_WORD_LENGTH:
            raise WordTooLong(len(steps), MAX_WORD_LENGTH)
        final = _scan(steps)
        if final != 0:
            raise Unbalanced(final)

    def __str__(self) -> str:
        return "".join(step.value for step in self.steps)

    def __repr__(self) -> str:
        return f"DyckWord({str(self)!r})"

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def render(self, up: str = "u", down: str = "d") -> str:
        return "".join(up if step is UP else down for step in self.steps)


@dataclass(frozen=True)
class PrimeFragment:
    """A peak together with its full ascent (left) and descent (right).

    ``peak`` is the peak's position in the enclosing path, not in the
    fragment drawn on its own.
    """

    ascent_len: int
    descent_len: int
    peak: LatticePoint

    def __post_init__(self) -> None:
        if self.ascent_len < 1 or self.descent_len < 1:
            raise ValueError(
                f"fragment needs a non-empty ascent and descent, "
                f"got {self.ascent_len} and {self.descent_len}"
            )
        object.__setattr__(self, "peak", LatticePoint(*self.peak))

    @property
    def steps(self) -> tuple[Step, ...]:
        return (UP,) * self.ascent_len + (DOWN,) * self.descent_len

    def __str__(self) -> str:
        return "u" * self.ascent_len + "d" * self.descent_len


def parse_word(text: str, alphabet: Mapping[str, Step] | None = None) -> DyckWord:
    """Parse ``text`` into a :class:`DyckWord`.

    ``alphabet`` maps exactly two distinct characters to ``Step.UP`` and
    ``Step.DOWN``; the default is ``{"u": UP, "d": DOWN}``.  Scanning is
    left to right and the first problem wins: an unknown character raises
    :class:`InvalidSymbol`, a prefix below level 0 raises
    :class:`PrefixUnderflow`, and a nonzero final level raises
    :class:`Unbalanced`.
    """
    if alphabet is None:
        alphabet = DEFAULT_ALPHABET
    _check_alphabet(alphabet)
    if len(text) > MAX_WORD_LENGTH:
        raise WordTooLong(len(text), MAX_WORD_LENGTH)

    steps = []
    level = 0
    for i, ch in enumerate(text):
        step = alphabet.get(ch)
        if step is None:
            raise InvalidSymbol(i, ch)
        level += 1 if step is UP else -1
        if level < 0:
            raise PrefixUnderflow(i)
        steps.append(step)
    if level != 0:
        raise Unbalanced(level)
    return DyckWord(tuple(steps))


def _check_alphabet(alphabet: Mapping[str, Step]) -> None:
    if len(alphabet) != 2 or set(alphabet.values()) != {UP, DOWN}:
        raise ValueError("alphabet must map two distinct characters to UP and DOWN")
    if any(len(ch) != 1 for ch in alphabet):
        raise ValueError("alphabet keys must be single characters")


def alphabet_from_pair(pair: str) -> dict[str, Step]:
    """Build an alphabet from a two-character string ``"<up><down>"``, e.g. ``"()"``."""
    if len(pair) != 2 or pair[0] == pair[1]:
        raise ValueError(f"alphabet must be two distinct characters, got {pair!r}")
    return {pair[0]: UP, pair[1]: DOWN}


def semilength(w: DyckWord) -> int:
    return w.semilength


def level_profile(w: DyckWord) -> list[int]:
    """Levels ``y_0 .. y_2n`` visited by the path."""
    levels = [0]
    for step in w.steps:
        levels.append(levels[-1] + (1 if step is UP else -1))
    return levels


def peaks(w: DyckWord) -> list[LatticePoint]:
    """Inner points of every ``ud`` subword, in path order."""
    levels = level_profile(w)
    steps = w.steps
    return [
        LatticePoint(i, levels[i])
        for i in range(1, len(steps))
        if steps[i - 1] is UP and steps[i] is DOWN
    ]


def valleys(w: DyckWord, include_terminal: bool = True) -> list[LatticePoint]:
    """Inner points of every ``du`` subword, in path order.

    With ``include_terminal`` the end point ``(2n, 0)`` is appended for a
    non-empty word.  The origin is never included.
    """
    levels = level_profile(w)
    steps = w.steps
    out = [
        LatticePoint(i, levels[i])
        for i in range(1, len(steps))
        if steps[i - 1] is DOWN and steps[i] is UP
    ]
    if include_terminal and steps:
        out.append(LatticePoint(len(steps), 0))
    return out


def factorize(w: DyckWord) -> list[PrimeFragment]:
    """Cut the path at its interior valleys into single-peak fragments."""
    tops = peaks(w)
    lows = [LatticePoint(0, 0), *valleys(w, include_terminal=True)]
    return [
        PrimeFragment(peak.y - lows[k].y, peak.y - lows[k + 1].y, peak)
        for k, peak in enumerate(tops)
    ]


def concat_fragments(fragments: Sequence[PrimeFragment]) -> DyckWord:
    """Inverse of :func:`factorize`.

    Raises :class:`NotAPath` when the running level would go negative,
    does not end at 0, or a fragment's recorded peak disagrees with where
    it lands.
    """
    x = level = 0
    steps: list[Step] = []
    for k, frag in enumerate(fragments):
        x += frag.ascent_len
        level += frag.ascent_len
        if frag.peak != (x, level):
            raise NotAPath(f"fragment {k} peak {tuple(frag.peak)} does not match position {(x, level)}")
        x += frag.descent_len
        level -= frag.descent_len
        if level < 0:
            raise NotAPath(f"fragment {k} descends to level {level}")
        steps.extend(frag.steps)
    if level != 0:
        raise NotAPath(f"fragments end at level {level}, expected 0")
    return DyckWord(tuple(steps))


def is_prime(w: DyckWord) -> bool:
    """True iff ``w`` is the pyramid ``u^n d^n``."""
    if not w.steps:
        raise EmptyWord("primality is undefined for the empty word")
    return len(peaks(w)) == 1
