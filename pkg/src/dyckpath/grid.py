"""Condensed grid coordinates and Cantor pairing.

In the condensed grid a reachable node ``(x, y)`` moves to
``((x - y) // 2, y)``: each ascending diagonal collapses to one column, so
every node of the triangle ``(0,0), (0,n), (n,0)`` is reachable and no
grid cell is wasted.
"""

from __future__ import annotations

from math import isqrt
from typing import NamedTuple

from dyckpath.core import DyckWord, LatticePoint, peaks, valleys
from dyckpath.errors import ParityViolation


class ModifiedPoint(NamedTuple):
    xm: int
    y: int


def to_modified(p: tuple[int, int]) -> ModifiedPoint:
    x, y = p
    if y < 0 or y > x or (x - y) % 2:
        raise ParityViolation(f"({x},{y}) is not a reachable node")
    return ModifiedPoint((x - y) // 2, y)


def from_modified(m: tuple[int, int]) -> LatticePoint:
    xm, y = m
    if xm < 0 or y < 0:
        raise ValueError(f"modified coordinates must be non-negative, got ({xm},{y})")
    return LatticePoint(2 * xm + y, y)


def peaks_modified(w: DyckWord) -> list[ModifiedPoint]:
    return [to_modified(p) for p in peaks(w)]


def valleys_modified(w: DyckWord, include_terminal: bool = True) -> list[ModifiedPoint]:
    return [to_modified(v) for v in valleys(w, include_terminal)]


def cantor_pair(k1: int, k2: int) -> int:
    """Cantor pairing ``(k1 + k2)(k1 + k2 + 1)/2 + k2``.

    Python integers are unbounded, so there is no overflow condition.
    """
    if k1 < 0 or k2 < 0:
        raise ValueError(f"pairing needs non-negative integers, got ({k1},{k2})")
    s = k1 + k2
    return s * (s + 1) // 2 + k2


def cantor_unpair(z: int) -> tuple[int, int]:
    """Inverse of :func:`cantor_pair`, exact for any size of ``z``."""
    if z < 0:
        raise ValueError(f"cannot unpair negative integer {z}")
    w = (isqrt(8 * z + 1) - 1) // 2
    k2 = z - w * (w + 1) // 2
    return w - k2, k2


def encode_peak_set(w: DyckWord) -> list[int]:
    """Pair each condensed peak into one integer, in path order."""
    return [cantor_pair(xm, y) for xm, y in peaks_modified(w)]
