"""Monomial ideals in a polynomial ring and their colengths."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from ..errors import CapacityError, DomainError, InfiniteColengthError
from .poly import Monomial


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens: Iterable[Sequence[int]]) -> tuple[Monomial, ...]:
    """Minimal generators of the ideal generated by ``gens``, in sorted order."""
    uniq = sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), g))
    kept: list[Monomial] = []
    for g in uniq:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = minimalize(self.generators)
        if any(len(g) != self.nvars for g in gens):
            raise DomainError(f"every generator must have {self.nvars} exponents")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, *gens: Sequence[int]) -> "MonomialIdeal":
        if not gens:
            raise DomainError("use MonomialIdeal(nvars, ()) for the zero ideal")
        return cls(len(gens[0]), tuple(tuple(g) for g in gens))

    @classmethod
    def maximal(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, tuple(tuple(int(i == j) for j in range(nvars)) for i in range(nvars)))

    def contains(self, mono: Sequence[int]) -> bool:
        return any(divides(g, mono) for g in self.generators)

    def pure_powers(self) -> list[int | None]:
        """Exponent of the pure power of each variable among the generators."""
        out: list[int | None] = [None] * self.nvars
        for g in self.generators:
            support = [i for i, a in enumerate(g) if a]
            if len(support) == 1:
                i = support[0]
                out[i] = g[i] if out[i] is None else min(out[i], g[i])
        return out

    def is_m_primary(self) -> bool:
        return all(a is not None for a in self.pure_powers())

    def is_parameter_ideal(self) -> bool:
        """Generated by one pure power of each variable."""
        return len(self.generators) == self.nvars and self.is_m_primary()


def frobenius_power(ideal: MonomialIdeal, q: int) -> MonomialIdeal:
    if q < 1:
        raise DomainError("q must be at least 1")
    return MonomialIdeal(ideal.nvars, tuple(tuple(q * a for a in g) for g in ideal.generators))


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.nvars != b.nvars:
        raise DomainError("ideals live in different rings")
    return MonomialIdeal(
        a.nvars, tuple(tuple(x + y for x, y in zip(g, h)) for g in a.generators for h in b.generators)
    )


@lru_cache(maxsize=65536)
def _count_standard(gens: tuple[Monomial, ...], nvars: int) -> int:
    """Standard monomials of an m-primary monomial ideal (minimal generators).

    Slices along the last variable: monomials with last exponent k are
    standard iff their projection avoids every generator whose last exponent
    is <= k, and that set only changes at the distinct last exponents.
    """
    if nvars == 0:
        return 0 if gens else 1
    if nvars == 1:
        return min(g[0] for g in gens)
    levels = sorted({g[-1] for g in gens})
    if levels[0] != 0:
        raise InfiniteColengthError("ideal is not m-primary")
    total = 0
    for lo, hi in zip(levels, levels[1:]):
        proj = minimalize(g[:-1] for g in gens if g[-1] <= lo)
        total += (hi - lo) * _count_standard(proj, nvars - 1)
    return total


def monomial_colength(ideal: MonomialIdeal) -> int:
    if not ideal.is_m_primary():
        missing = [i for i, a in enumerate(ideal.pure_powers()) if a is None]
        raise InfiniteColengthError(f"no pure power of variable(s) {missing}: colength is infinite")
    return _count_standard(ideal.generators, ideal.nvars)


def staircase_enumeration(ideal: MonomialIdeal, max_points: int = 5_000_000) -> int:
    """Brute-force count of standard monomials inside the bounding box."""
    box = ideal.pure_powers()
    if any(a is None for a in box):
        raise InfiniteColengthError("ideal is not m-primary")
    if math.prod(box) > max_points:
        raise CapacityError(f"bounding box has more than {max_points} points", cap=max_points)
    grids = np.indices(box).reshape(len(box), -1).T
    inside = np.zeros(len(grids), dtype=bool)
    for g in ideal.generators:
        inside |= np.all(grids >= np.array(g), axis=1)
    return int(np.count_nonzero(~inside))


def standard_monomials(ideal: MonomialIdeal) -> list[Monomial]:
    box = ideal.pure_powers()
    if any(a is None for a in box):
        raise InfiniteColengthError("ideal is not m-primary")
    return [m for m in product(*(range(a) for a in box)) if not ideal.contains(m)]


def ordinary_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 1:
        raise DomainError("n must be at least 1")
    result, base = None, ideal
    while n:
        if n & 1:
            result = base if result is None else ideal_product(result, base)
        n >>= 1
        if n:
            base = ideal_product(base, base)
    return result


def ordinary_power_colength(ideal: MonomialIdeal, n: int) -> int:
    """Colength of the ordinary power ``I^n``.

    For a monomial parameter ideal ``(x_1^a_1, ..., x_d^a_d)`` a monomial lies
    outside ``I^n`` iff ``sum(floor(u_i / a_i)) < n``, which gives
    ``prod(a_i) * C(n + d - 1, d)`` directly.  Other ideals are multiplied out.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    if not ideal.is_m_primary():
        raise InfiniteColengthError("ideal is not m-primary")
    if ideal.is_parameter_ideal():
        d = ideal.nvars
        return math.prod(ideal.pure_powers()) * math.comb(n + d - 1, d)
    return monomial_colength(ordinary_power(ideal, n))
