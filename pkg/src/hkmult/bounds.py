"""Lower bounds for Hilbert-Kunz multiplicities of unmixed local rings.

The workhorse is :func:`key_lower_bound`: for a ring of multiplicity ``e``,
dimension ``d`` and a generator count ``r`` for the maximal ideal modulo the
tight closure of a minimal reduction,

    e_HK >= e * (v_s - r * (s - 1)^d / d!)        for every rational s >= 1,

where ``v_s`` is :func:`hkmult.volumes.box_simplex_volume`.  The dimension
specific case engines pick ``s`` the same way the published case analysis
does, and report which value they used.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .arith import RatLike, as_rat, format_rat
from .errors import DomainError
from .volumes import SlabSpec, beta, box_simplex_volume, weighted_slab_volume


class Method(str, enum.Enum):
    KEY = "Key"
    KEY_OPTIMIZED = "KeyOptimized"
    HYP2_EST = "Hyp2Est"
    BETA_HYP = "BetaHyp"
    CASE_TABLE_3D = "CaseTable3D"
    CASE_TABLE_4D = "CaseTable4D"
    INEQ_MUL = "IneqMul"


ANCHORS = {
    Method.KEY: "e_HK >= e*(v_s - r*(s-1)^d/d!)",
    Method.KEY_OPTIMIZED: "max over rational s in [1,2] of e*(v_s - r*(s-1)^d/d!)",
    Method.HYP2_EST: "e_HK >= 2 - (abc/12)(N^3 - n^3), N = 1/a+1/b+1/c-1/2, n = max(0, N-2/c)",
    Method.BETA_HYP: "hypersurface: e_HK >= beta_{d+1} * e",
    Method.CASE_TABLE_3D: "dimension 3 case split on e, s in {3/2, 7/4, 2}",
    Method.CASE_TABLE_4D: "dimension 4 case split: 3<=e<=10 (s=2), 11<=e<=29 (s=3/2), e>=30",
    Method.INEQ_MUL: "e/d! <= e_HK <= e",
}


@dataclass(frozen=True)
class BoundReport:
    value: Fraction
    method: Method
    parameters: dict = field(default_factory=dict)
    anchor: str = ""
    note: str = ""

    def __post_init__(self):
        if self.value <= 0:
            raise DomainError(f"a lower bound must be positive, got {self.value}")
        if not self.anchor:
            object.__setattr__(self, "anchor", ANCHORS[self.method])

    def to_json(self) -> dict:
        params = {
            k: format_rat(v) if isinstance(v, Fraction) else v
            for k, v in self.parameters.items()
        }
        out = {
            "value": format_rat(self.value),
            "decimal": float(self.value),
            "method": self.method.value,
            "parameters": params,
            "anchor": self.anchor,
        }
        if self.note:
            out["note"] = self.note
        return out


def sally_generator_bound(e: int, f_rational: bool) -> int:
    """Upper bound on the generator count of m/J* used as ``r``."""
    if e < 1:
        raise DomainError("multiplicity must be at least 1")
    return max(0, e - 1 if f_rational else e - 2)


def key_lower_bound(e: int, d: int, r: int, s: RatLike) -> Fraction:
    s = as_rat(s)
    if e < 1 or d < 1:
        raise DomainError("need e >= 1 and d >= 1")
    if s < 1:
        raise DomainError(f"s must be at least 1, got {s}")
    r = max(r, 0)
    return e * (box_simplex_volume(d, s) - r * (s - 1) ** d / math.factorial(d))


def key_lower_bound_nonfr_3d(e: int, s: RatLike) -> Fraction:
    """``e * (s^3/6 - (e+1)(s-1)^3/6)``: the bound with r = e - 2 in dimension 3."""
    s = as_rat(s)
    if e < 2:
        raise DomainError("need e >= 2")
    if not 1 <= s <= 2:
        raise DomainError(f"s must lie in [1, 2], got {s}")
    return e * (s ** 3 - (e + 1) * (s - 1) ** 3) / 6


def farey_unit_interval(limit: int) -> Iterator[tuple[int, int]]:
    """All reduced fractions a/b in [0, 1] with b <= limit, in increasing order."""
    a, b, c, d = 0, 1, 1, limit
    yield a, b
    while c <= limit:
        k = (limit + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        yield a, b


def _key_poly_on_unit_step(e: int, d: int, r: int) -> tuple[Fraction, ...]:
    """Ascending coefficients in ``s`` of the key bound restricted to [1, 2].

    On that interval v_s = (s^d - d(s-1)^d)/d!, so the bound is
    e * (s^d - (d + r)(s - 1)^d) / d!.
    """
    r = max(r, 0)
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] += 1
    for j in range(d + 1):
        coeffs[j] -= (d + r) * math.comb(d, j) * (-1) ** (d - j)
    scale = Fraction(e, math.factorial(d))
    return tuple(scale * c for c in coeffs)


def optimize_key_bound(e: int, d: int, r: int, denominator_limit: int) -> tuple[Fraction, Fraction]:
    """Exact maximum of :func:`key_lower_bound` over the Farey rationals in [1, 2].

    Candidates are screened in floating point, and everything within 1e-9 of
    the float maximum is re-evaluated exactly, so the result is exact.  Ties
    go to the smallest denominator, then the smallest ``s``.
    """
    if denominator_limit < 4:
        raise DomainError("denominator_limit must be at least 4")
    if e < 1 or d < 1:
        raise DomainError("need e >= 1 and d >= 1")
    pairs = np.array(list(farey_unit_interval(denominator_limit)), dtype=np.int64)
    nums, dens = pairs[:, 0] + pairs[:, 1], pairs[:, 1]
    s = nums / dens
    coeffs = _key_poly_on_unit_step(e, d, r)
    approx = np.polynomial.polynomial.polyval(s, [float(c) for c in coeffs])
    top = approx.max()
    near = np.nonzero(approx >= top - 1e-9 * max(1.0, abs(top)))[0]

    best: Optional[tuple[Fraction, Fraction]] = None
    for i in near:
        cand = Fraction(int(nums[i]), int(dens[i]))
        val = key_lower_bound(e, d, r, cand)
        if best is None or val > best[1] or (
            val == best[1] and (cand.denominator, cand) < (best[0].denominator, best[0])
        ):
            best = (cand, val)
    return best


def key_argmax_closed_form_3d(e: int) -> float:
    """Supremum over s in [1, 2] of the dimension-3 bound with r = e - 1."""
    if e < 2:
        raise DomainError("need e >= 2")
    s_star = (e + 2 + math.sqrt(e + 2)) / (e + 1)
    return e / 6 * s_star ** 2


def weight_parameters(a: int, b: int, c: int) -> tuple[Fraction, Fraction]:
    big = Fraction(1, a) + Fraction(1, b) + Fraction(1, c) - Fraction(1, 2)
    small = max(Fraction(0), big - Fraction(2, c))
    return big, small


def hypersurface_weight_bound(a: int, b: int, c: int) -> BoundReport:
    """Bound for ``X^2 - phi(Y, Z, W)`` when Y, Z, W carry orders 1/a, 1/b, 1/c.

    The subtracted term is four times the volume of the slab
    ``{y/a + z/b + w/c <= N/2}`` in the unit cube.  When N <= 0 that slab is
    empty and the bound is 2; the closed form is only applied for N > 0.
    """
    if not 2 <= a <= b <= c:
        raise DomainError(f"need 2 <= a <= b <= c, got ({a}, {b}, {c})")
    big, small = weight_parameters(a, b, c)
    cubic = max(big, Fraction(0)) ** 3 - small ** 3
    value = 2 - Fraction(a * b * c, 12) * cubic
    return BoundReport(
        value=value,
        method=Method.HYP2_EST,
        parameters={"a": a, "b": b, "c": c, "N": big, "n": small},
    )


def beta_hypersurface_bound(e: int, d: int) -> Fraction:
    if e < 1 or d < 1:
        raise DomainError("need e >= 1 and d >= 1")
    return beta(d) * e


def _case_3d_choice(e: int) -> Optional[Fraction]:
    if e == 2:
        return Fraction(2)
    if e == 3:
        return Fraction(7, 4)
    if 4 <= e <= 12:
        return Fraction(3, 2)
    return None


def classify_3d(e: int, f_rational: bool = True) -> BoundReport:
    """Lower bound for a three-dimensional unmixed ring of multiplicity ``e``.

    F-rational rings use r = e - 1 with s = 2 (e = 2), s = 7/4 (e = 3) and
    s = 3/2 (4 <= e <= 12); e >= 13 falls back to e/3!.  Otherwise r = e - 2,
    with s = 2 for e = 3, s = 7/4 for e = 4 and the F-rational choice of s for
    e >= 5.  For e = 2, r = 0 and s = 3 gives the bound e.
    """
    if e < 2:
        raise DomainError("need e >= 2 (e = 1 is the regular case)")
    r = sally_generator_bound(e, f_rational)
    if f_rational:
        s = _case_3d_choice(e)
    else:
        s = {2: Fraction(3), 3: Fraction(2), 4: Fraction(7, 4)}.get(e, _case_3d_choice(e))
    if s is None:
        return BoundReport(
            value=Fraction(e, 6),
            method=Method.INEQ_MUL,
            parameters={"e": e, "d": 3},
        )
    return BoundReport(
        value=key_lower_bound(e, 3, r, s),
        method=Method.CASE_TABLE_3D,
        parameters={"e": e, "d": 3, "r": r, "s": s, "f_rational": f_rational},
    )


def classify_4d(e: int) -> BoundReport:
    if e < 2:
        raise DomainError("need e >= 2 (e = 1 is the regular case)")
    if e >= 30:
        return BoundReport(value=Fraction(e, 24), method=Method.INEQ_MUL, parameters={"e": e, "d": 4})
    r = e - 1
    s = Fraction(3, 2) if e >= 11 else Fraction(2)
    note = ""
    if e == 2:
        note = "generic key bound only; the sharp value for e = 2 is the quadric closed form"
    return BoundReport(
        value=key_lower_bound(e, 4, r, s),
        method=Method.CASE_TABLE_4D,
        parameters={"e": e, "d": 4, "r": r, "s": s},
        note=note,
    )


QUADRIC_4D_SLAB = SlabSpec(
    weights=(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)),
    threshold=Fraction(2, 3),
)


def quadric_4d_weighted_bound() -> Fraction:
    """Bound 2 - 4 * vol for a four-dimensional double point not isomorphic to the quadric."""
    return 2 - 4 * weighted_slab_volume(QUADRIC_4D_SLAB)


def a1_chain_bound(c: int) -> Fraction:
    if c < 3:
        raise DomainError("need c >= 3")
    return Fraction(3, 2) - Fraction(2, 3 * c * c)


def multiplicity_interval(e: int, d: int) -> tuple[Fraction, Fraction]:
    """The elementary bracket e/d! <= e_HK <= e."""
    return Fraction(e, math.factorial(d)), Fraction(e)
