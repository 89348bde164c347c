"""Known exact Hilbert-Kunz multiplicities.

Veronese subrings, the diagonal quadrics ``x_0^2 + ... + x_d^2`` for d <= 4,
their large-characteristic limit through the zigzag numbers, and the
three-dimensional rational normal scrolls.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import PiecewisePoly, poly_add, poly_from_shift, poly_scale
from .errors import CharacteristicError, DomainError, UnsupportedDimensionError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def odd_primes(count: int) -> list[int]:
    out, n = [], 3
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n += 2
    return out


def veronese_hk(d: int, r: int) -> Fraction:
    """``C(d + r - 1, d) / r`` for the r-th Veronese subring of k[[x_1..x_d]].

    The lower binomial index is ``d``: this gives (r + 1)/2 for d = 2 and 2 for
    (d, r) = (3, 2), the known values for these rings.
    """
    if d < 1 or r < 1:
        raise DomainError("need d >= 1 and r >= 1")
    return Fraction(math.comb(d + r - 1, d), r)


def quadric_hk(d: int, p: int) -> Fraction:
    """Hilbert-Kunz multiplicity of ``k[[x_0..x_d]]/(x_0^2 + ... + x_d^2)`` in char p."""
    if p == 2 or not is_prime(p):
        raise CharacteristicError(f"characteristic must be an odd prime, got {p}")
    if d < 1:
        raise DomainError("need d >= 1")
    if d == 1:
        return Fraction(2)
    if d == 2:
        return Fraction(3, 2)
    if d == 3:
        return Fraction(4, 3)
    if d == 4:
        return Fraction(29 * p * p + 15, 24 * p * p + 12)
    raise UnsupportedDimensionError(f"no closed form for quadrics of dimension {d} >= 5")


@dataclass(frozen=True)
class ZigzagTable:
    """Integers ``c_d`` with ``sec x + tan x = sum c_d x^d / d!``."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(v <= 0 for v in self.values):
            raise DomainError("zigzag numbers are positive")

    def __getitem__(self, d: int) -> int:
        return self.values[d]

    def __len__(self) -> int:
        return len(self.values)


def zigzag(dmax: int) -> ZigzagTable:
    """Zigzag numbers c_0..c_dmax from the boustrophedon (Seidel-Entringer) triangle."""
    if dmax < 0:
        raise DomainError("dmax must be non-negative")
    values = [1]
    row = [1]
    for n in range(1, dmax + 1):
        new = [0]
        for k in range(n):
            new.append(new[-1] + row[n - 1 - k])
        row = new
        values.append(row[-1])
    return ZigzagTable(tuple(values))


def monsky_limit(d: int) -> Fraction:
    """``1 + c_d/d!``, the limit of ``quadric_hk(d, p)`` as p grows."""
    if d < 1:
        raise DomainError("need d >= 1")
    return 1 + Fraction(zigzag(d)[d], math.factorial(d))


def scroll_hk(n: int) -> Fraction:
    """Rational normal scroll with polygon (0,0),(1,0),(1,1),(-n,1); multiplicity n + 2."""
    if n < 0:
        raise DomainError("need n >= 0")
    return (n + 2) * (Fraction(1, 2) + Fraction(1, 6 * (n + 1)))


def scroll_profile(n: int) -> PiecewisePoly:
    """Area of the part of tP not covered by the shifted copies (a,b) + (t-1)P.

    The profile is quadratic on [0, 1), [1, (n+2)/(n+1)) and
    [(n+2)/(n+1), 2) and vanishes from t = 2 on.  For n = 0 the middle
    breakpoint coincides with 2 and only two nonzero pieces remain.
    """
    if n < 0:
        raise DomainError("need n >= 0")
    half_area = Fraction(n + 2, 2)
    area = (Fraction(0), Fraction(0), half_area)                 # vol(tP)
    shifted = poly_from_shift(area, Fraction(1))                  # vol((t-1)P)
    covered = poly_add(area, poly_scale(shifted, -(n + 4)))
    if n == 0:
        return PiecewisePoly(
            breakpoints=(Fraction(1), Fraction(2)),
            pieces=(area, covered, ()),
        )
    # (n+2) t (2-t)/2 + (n+2)(2-t)^2/(2n)
    k = Fraction(n + 2, 2 * n)
    late = poly_add(
        (Fraction(0), Fraction(n + 2), -half_area),
        (4 * k, -4 * k, k),
    )
    mid = Fraction(n + 2, n + 1)
    return PiecewisePoly(
        breakpoints=(Fraction(1), mid, Fraction(2)),
        pieces=(area, covered, late, ()),
    )
