"""Exact rational arithmetic and piecewise polynomials.

Every exact quantity in the package is a :class:`fractions.Fraction`
(aliased here as ``Rat``): arbitrary precision, always reduced, with a
positive denominator.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError, UnboundedIntegralError

Rat = Fraction
RatLike = Union[int, Fraction, str]

INF = math.inf


def as_rat(x: RatLike) -> Fraction:
    """Coerce ``x`` to an exact rational; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot convert {type(x).__name__} exactly to a rational")


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError(f"binom({n}, {k}) needs non-negative arguments")
    return math.comb(n, k)


def format_rat(x: RatLike) -> str:
    """Canonical ``num/den`` rendering; the denominator is dropped when 1."""
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(text: str) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational: {text!r}") from exc
    return value


def to_decimal(x: RatLike, digits: int = 6) -> str:
    """Decimal rendering with ``digits`` significant digits (round half even)."""
    x = as_rat(x)
    if digits < 1:
        raise DomainError("digits must be at least 1")
    with localcontext() as ctx:
        ctx.prec = digits
        value = Decimal(x.numerator) / Decimal(x.denominator)
    if value and not -12 <= value.adjusted() <= 15:
        return format(value, "e")
    return format(value, "f")


# --- polynomials in one variable, coefficients in ascending order -----------

def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_antiderivative(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return (Fraction(0),) + tuple(Fraction(c) / (i + 1) for i, c in enumerate(coeffs))


def poly_from_shift(coeffs: Sequence[Fraction], shift: Fraction) -> tuple[Fraction, ...]:
    """Coefficients of ``p(x - shift)`` given those of ``p(x)``."""
    out = [Fraction(0)] * len(coeffs)
    for k, c in enumerate(coeffs):
        if not c:
            continue
        for j in range(k + 1):
            out[j] += c * math.comb(k, j) * (-shift) ** (k - j)
    return tuple(out)


def poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def poly_scale(a: Sequence[Fraction], c: RatLike) -> tuple[Fraction, ...]:
    c = as_rat(c)
    return tuple(c * x for x in a)


def _trim(coeffs: Iterable[RatLike]) -> tuple[Fraction, ...]:
    out = [as_rat(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class PiecewisePoly:
    """Univariate piecewise polynomial over rational breakpoints.

    ``pieces[0]`` covers ``(-inf, breakpoints[0])``, ``pieces[i]`` covers
    ``[breakpoints[i-1], breakpoints[i])`` and ``pieces[-1]`` covers
    ``[breakpoints[-1], inf)``.  Evaluation at a breakpoint uses the piece on
    its right.
    """

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        bps = tuple(as_rat(b) for b in self.breakpoints)
        pieces = tuple(_trim(p) for p in self.pieces)
        if len(pieces) != len(bps) + 1:
            raise DomainError(
                f"{len(bps)} breakpoints need {len(bps) + 1} pieces, got {len(pieces)}"
            )
        if any(b1 >= b2 for b1, b2 in zip(bps, bps[1:])):
            raise DomainError("breakpoints must be strictly increasing")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", pieces)

    def piece_index(self, x: Fraction) -> int:
        return bisect_right(self.breakpoints, x)

    def __call__(self, x: RatLike) -> Fraction:
        return pp_eval(self, x)


def pp_eval(f: PiecewisePoly, x: RatLike) -> Fraction:
    x = as_rat(x)
    return poly_eval(f.pieces[f.piece_index(x)], x)


def _edge(x) -> Union[Fraction, float]:
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise TypeError("finite floats are not accepted as integration limits")
    return as_rat(x)


def pp_integrate(f: PiecewisePoly, a, b) -> Fraction:
    """Exact integral of ``f`` over ``[a, b]``.

    Either limit may be infinite (``math.inf``/``-math.inf``); the tail piece
    on that side must then be identically zero.
    """
    a, b = _edge(a), _edge(b)
    if a > b:
        raise DomainError(f"integration limits out of order: {a} > {b}")
    if a == b:
        return Fraction(0)
    if a == -INF and f.pieces[0]:
        raise UnboundedIntegralError("left tail is nonzero on an infinite interval")
    if b == INF and f.pieces[-1]:
        raise UnboundedIntegralError("right tail is nonzero on an infinite interval")

    edges = [-INF, *f.breakpoints, INF]
    total = Fraction(0)
    for i, piece in enumerate(f.pieces):
        lo, hi = max(a, edges[i]), min(b, edges[i + 1])
        if lo >= hi or not piece:
            continue
        anti = poly_antiderivative(piece)
        total += poly_eval(anti, hi) - poly_eval(anti, lo)
    return total
