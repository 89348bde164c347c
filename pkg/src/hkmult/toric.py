"""Lattice-point colengths of the three-dimensional rational normal scroll.

The ring is the semigroup ring of the cone over the polygon
``P = conv{(0,0), (1,0), (1,1), (0,1), (-1,1), ..., (-n,1)}``, which is
``{(x, y) : 0 <= y <= 1, -n*y <= x <= 1}``.  A lattice point ``u`` in degree
``deg`` lies in ``m^[q]`` iff ``u - q*g`` is a lattice point of
``(deg - q) P`` for some vertex ``g``; below degree q nothing is covered.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import Rat, as_rat
from .errors import DomainError


@dataclass(frozen=True)
class ScrollPolygon:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("n must be >= 0")

    @property
    def vertices(self) -> tuple[tuple[int, int], ...]:
        return ((0, 0), (1, 0), (1, 1), (0, 1)) + tuple((-k, 1) for k in range(1, self.n + 1))

    def contains(self, x, y, t=1) -> bool:
        """Is ``(x, y)`` in the dilation ``t P``?"""
        return 0 <= y <= t and -self.n * y <= x <= t

    def row(self, y, t):
        """``(lo, hi)`` x-range of row ``y`` of ``t P``, or None."""
        if t < 0 or not 0 <= y <= t:
            return None
        return -self.n * y, t


@dataclass(frozen=True)
class ShiftedCoverCount:
    q: int
    per_degree: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.per_degree)


def _count_outside(lo: int, hi: int, intervals: Sequence[tuple[int, int]]) -> int:
    """Integers in ``[lo, hi]`` outside every interval."""
    if hi < lo:
        return 0
    covered = 0
    cur = lo - 1  # last integer already accounted for
    for a, b in sorted(intervals):
        a, b = max(a, cur + 1), min(b, hi)
        if a <= b:
            covered += b - a + 1
            cur = b
    return hi - lo + 1 - covered


def scroll_slice_count(n: int, q: int, deg: int) -> int:
    """Lattice points of ``deg P`` not covered by the translates ``q g + (deg - q) P``."""
    if q < 1 or deg < 0:
        raise DomainError("need q >= 1 and deg >= 0")
    poly = ScrollPolygon(n)
    shifts = [(q * a, q * b) for a, b in poly.vertices]
    s = deg - q
    total = 0
    for y in range(deg + 1):
        lo, hi = poly.row(y, deg)
        cover = []
        if s >= 0:
            for a, b in shifts:
                r = poly.row(y - b, s)
                if r is not None:
                    cover.append((a + r[0], a + r[1]))
        total += _count_outside(lo, hi, cover)
    return total


def brute_slice_count(n: int, q: int, deg: int) -> int:
    """Same count by testing every point of the bounding box against each translate."""
    poly = ScrollPolygon(n)
    s = deg - q
    count = 0
    for y in range(deg + 1):
        for x in range(-n * deg, deg + 1):
            if not poly.contains(x, y, deg):
                continue
            hit = s >= 0 and any(poly.contains(x - q * a, y - q * b, s) for a, b in poly.vertices)
            count += not hit
    return count


def scroll_cover_counts(n: int, q: int) -> ShiftedCoverCount:
    # slices vanish from degree 2q on; 2q itself is included as a check
    return ShiftedCoverCount(q, tuple(scroll_slice_count(n, q, deg) for deg in range(2 * q + 1)))


def scroll_colength(n: int, q: int) -> int:
    """``l(A/m^[q])`` for the scroll with parameter n."""
    return scroll_cover_counts(n, q).total


def scroll_volume_check(n: int, t) -> Rat:
    """Exact area of ``t P`` minus the translates ``g + (t - 1) P``.

    Each row's uncovered length is piecewise linear in the row height, with
    breaks only where two interval endpoints meet or a translate starts or
    stops.  Between consecutive breaks the midpoint rule is exact.
    """
    t = as_rat(t)
    if n < 0:
        raise DomainError("n must be >= 0")
    if not 0 <= t <= 2:
        raise DomainError(f"t = {t} lies outside [0, 2]")
    poly = ScrollPolygon(n)
    s = t - 1
    copies = [(Fraction(a), Fraction(b)) for a, b in poly.vertices] if s >= 0 else []

    # endpoint lines as (constant, slope in y)
    lines = {(Fraction(0), Fraction(-n)), (t, Fraction(0))}
    cuts = {Fraction(0), t}
    for a, b in copies:
        lines.add((a + n * b, Fraction(-n)))
        lines.add((a + s, Fraction(0)))
        cuts.update((b, b + s))
    lines = list(lines)
    for i, (c1, k1) in enumerate(lines):
        for c2, k2 in lines[i + 1:]:
            if k1 != k2:
                cuts.add((c2 - c1) / (k1 - k2))
    ys = sorted(y for y in cuts if 0 <= y <= t)

    def uncovered(y: Fraction) -> Fraction:
        lo, hi = poly.row(y, t)
        segs = []
        for a, b in copies:
            r = poly.row(y - b, s)
            if r is not None:
                segs.append((max(a + r[0], lo), min(a + r[1], hi)))
        covered, cur = Fraction(0), lo
        for a, b in sorted(segs):
            a = max(a, cur)
            if a < b:
                covered += b - a
                cur = b
        return hi - lo - covered

    area = Fraction(0)
    for y0, y1 in zip(ys, ys[1:]):
        area += (y1 - y0) * uncovered((y0 + y1) / 2)
    return area
