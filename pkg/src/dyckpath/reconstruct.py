"""Rebuild a Dyck path from its peaks alone or from its valleys alone.

Between two neighbouring peaks ``(xl, yl)`` and ``(xr, yr)`` the valley
sits where the descent line ``x + y = xl + yl`` meets the ascent line
``x - y = xr - yr``.  Symmetrically, between two neighbouring valleys the
peak sits where the ascent ``x - y = xl - yl`` meets the descent
``x + y = xr + yr``.  Both are solved in exact integer arithmetic.

Valley sets are in canonical form: the terminal point ``(2n, 0)`` is the
last element and the origin is implicit.  An empty peak or valley set
stands for the empty path.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from dyckpath.core import DOWN, UP, DyckWord, LatticePoint
from dyckpath.errors import InvalidAdjacency, InvalidPeakSet, InvalidValleySet

ORIGIN = LatticePoint(0, 0)

PointsLike = Iterable[Sequence[int]]


@dataclass(frozen=True)
class Violation:
    """One failed invariant. ``index`` is a point index or, for pair rules,
    the index of the right-hand point of the pair."""

    rule: str
    index: int | None
    message: str

    def __str__(self) -> str:
        where = "" if self.index is None else f"[{self.index}] "
        return f"{where}{self.rule}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    points: tuple[LatticePoint, ...]
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        return "invalid: " + "; ".join(str(v) for v in self.violations)


def _is_int(v: object) -> bool:
    return type(v) is int or (isinstance(v, int) and not isinstance(v, bool))


def _coerce(points: PointsLike) -> tuple[LatticePoint, ...]:
    out = []
    for p in points:
        x, y = p
        if not (_is_int(x) and _is_int(y)):
            raise TypeError(f"point coordinates must be integers, got {p!r}")
        out.append(p if type(p) is LatticePoint else LatticePoint(x, y))
    return tuple(out)


def _point_checks(pts: Sequence[LatticePoint], min_level: int) -> list[Violation]:
    found = []
    for i, (x, y) in enumerate(pts):
        if y < min_level:
            found.append(Violation("level", i, f"y = {y} < {min_level}"))
        if (x - y) % 2:
            found.append(Violation("parity", i, f"{x} ≢ {y} (mod 2)"))
        if y > x:
            found.append(Violation("above-diagonal", i, f"y = {y} > x = {x}"))
    return found


def validate_peak_set(points: PointsLike) -> ValidationReport:
    """Check every peak-set invariant and report all failures."""
    pts = _coerce(points)
    found = _point_checks(pts, min_level=1)
    if not pts:
        return ValidationReport(pts)
    x0, y0 = pts[0]
    if x0 != y0:
        found.append(Violation("first-diagonal", 0, f"first peak must have x = y, got ({x0},{y0})"))
    for k in range(1, len(pts)):
        (xl, yl), (xr, yr) = pts[k - 1], pts[k]
        a, b = xl + yl, xr - yr
        if xr <= xl:
            found.append(Violation("order", k, f"x not strictly increasing ({xl} then {xr})"))
        if a < b:
            found.append(
                Violation("valley-below-axis", k, f"a = {a} < b = {b}, valley below axis (need a ≥ b)")
            )
        if b <= xl - yl:
            found.append(
                Violation("valley-not-below-left", k, f"x_r - y_r = {b} ≤ x_l - y_l = {xl - yl}")
            )
        if xr + yr <= a:
            found.append(
                Violation("valley-not-below-right", k, f"x_r + y_r = {xr + yr} ≤ x_l + y_l = {a}")
            )
    return ValidationReport(pts, tuple(found))


def validate_valley_set(points: PointsLike) -> ValidationReport:
    """Check every canonical valley-set invariant and report all failures.

    The origin is prepended implicitly for the pair rules, so pair ``k``
    is (point ``k-1`` or the origin, point ``k``).
    """
    pts = _coerce(points)
    found = _point_checks(pts, min_level=0)
    if not pts:
        return ValidationReport(pts)
    if pts[-1].y != 0:
        found.append(
            Violation("terminal", len(pts) - 1, f"last valley must have y = 0, got y = {pts[-1].y}")
        )
    prev = ORIGIN
    for k, (xr, yr) in enumerate(pts):
        xl, yl = prev
        if xr <= xl:
            found.append(Violation("order", k, f"x not strictly increasing ({xl} then {xr})"))
        if xr + yr <= xl + yl:
            found.append(
                Violation("peak-not-above-left", k, f"x_r + y_r = {xr + yr} ≤ x_l + y_l = {xl + yl}")
            )
        if xr - yr <= xl - yl:
            found.append(
                Violation("peak-not-above-right", k, f"x_r - y_r = {xr - yr} ≤ x_l - y_l = {xl - yl}")
            )
        prev = pts[k]
    return ValidationReport(pts, tuple(found))


def _halve(value: int) -> int:
    assert not value & 1, f"inexact halving of {value}"
    return value >> 1


def _valley(p_l: LatticePoint, p_r: LatticePoint) -> LatticePoint:
    a, b = p_l.x + p_l.y, p_r.x - p_r.y
    return LatticePoint(_halve(a + b), _halve(a - b))


def _peak(v_l: LatticePoint, v_r: LatticePoint) -> LatticePoint:
    s, t = v_l.x - v_l.y, v_r.x + v_r.y
    return LatticePoint(_halve(s + t), _halve(t - s))


def valley_between(p_l: Sequence[int], p_r: Sequence[int]) -> LatticePoint:
    """The valley between two neighbouring peaks."""
    report = validate_peak_set([p_l, p_r])
    # The pair may sit anywhere in the path, so the first-peak rule is not ours to enforce.
    problems = [v for v in report.violations if v.rule != "first-diagonal"]
    if problems:
        raise InvalidAdjacency("; ".join(str(v) for v in problems))
    return _valley(*report.points)


def peak_between(v_l: Sequence[int], v_r: Sequence[int]) -> LatticePoint:
    """The peak between two neighbouring valleys (either may be the origin or terminal)."""
    left, right = _coerce([v_l, v_r])
    (xl, yl), (xr, yr) = left, right
    problems = _point_checks([left, right], min_level=0)
    if xr <= xl:
        problems.append(Violation("order", 1, f"x not strictly increasing ({xl} then {xr})"))
    if xr + yr <= xl + yl or xr - yr <= xl - yl:
        problems.append(Violation("peak-dominance", 1, "peak would not lie strictly above both valleys"))
    if problems:
        raise InvalidAdjacency("; ".join(str(v) for v in problems))
    return _peak(left, right)


def _checked_peaks(ps: PointsLike) -> tuple[LatticePoint, ...]:
    report = validate_peak_set(ps)
    if not report.valid:
        raise InvalidPeakSet(report)
    return report.points


def _checked_valleys(vs: PointsLike) -> tuple[LatticePoint, ...]:
    report = validate_valley_set(vs)
    if not report.valid:
        raise InvalidValleySet(report)
    return report.points


def _valleys_of(tops: Sequence[LatticePoint]) -> list[LatticePoint]:
    if not tops:
        return []
    out = [_valley(tops[k - 1], tops[k]) for k in range(1, len(tops))]
    last = tops[-1]
    out.append(LatticePoint(last.x + last.y, 0))
    return out


def _peaks_of(lows: Sequence[LatticePoint]) -> list[LatticePoint]:
    prev = ORIGIN
    out = []
    for v in lows:
        out.append(_peak(prev, v))
        prev = v
    return out


def _word_between(tops: Sequence[LatticePoint], lows: Sequence[LatticePoint]) -> DyckWord:
    # lows has one more entry than tops: origin, interior valleys, terminal.
    steps = []
    for k, top in enumerate(tops):
        steps.extend([UP] * (top.y - lows[k].y))
        steps.extend([DOWN] * (top.y - lows[k + 1].y))
    return DyckWord(tuple(steps))


def valleys_from_peaks(ps: PointsLike) -> list[LatticePoint]:
    """All valleys of the path with peak set ``ps``, terminal point included."""
    return _valleys_of(_checked_peaks(ps))


def peaks_from_valleys(vs: PointsLike) -> list[LatticePoint]:
    """All peaks of the path with canonical valley set ``vs``."""
    return _peaks_of(_checked_valleys(vs))


def word_from_peaks(ps: PointsLike) -> DyckWord:
    """The unique Dyck word whose peak set is ``ps``.

    The whole set is validated before any step is emitted.
    """
    tops = _checked_peaks(ps)
    return _word_between(tops, [ORIGIN, *_valleys_of(tops)])


def word_from_valleys(vs: PointsLike) -> DyckWord:
    """The unique Dyck word whose canonical valley set is ``vs``."""
    lows = _checked_valleys(vs)
    return _word_between(_peaks_of(lows), [ORIGIN, *lows])
