"""Exact volumes of cube/half-space intersections and the hypersurface constants.

``box_simplex_volume(d, s)`` is the volume of ``{x in [0,1]^d : sum(x) <= s}``,
written ``v_s`` throughout the package; ``box_simplex_complement`` is
``1 - v_s``.  Both, and :func:`weighted_slab_volume`, use inclusion-exclusion
over the vertices of the unit cube and never touch floating point.

``beta(d)`` is indexed by the dimension ``d`` of the hypersurface and returns
the constant usually written with subscript ``d + 1``: ``beta(2) == 3/4``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .arith import RatLike, as_rat
from .errors import DomainError

# 2^d subsets are enumerated; d = 24 is ~1.7e7 exact terms, a few minutes.
MAX_SLAB_DIM = 24


@dataclass(frozen=True)
class SlabSpec:
    """The region ``{x in [0,1]^d : sum(w_i * x_i) <= threshold}``."""

    weights: tuple[Fraction, ...]
    threshold: Fraction

    def __post_init__(self):
        weights = tuple(as_rat(w) for w in self.weights)
        if not weights:
            raise DomainError("a slab needs at least one weight")
        if any(w <= 0 for w in weights):
            raise DomainError("slab weights must be positive")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "threshold", as_rat(self.threshold))

    @property
    def dim(self) -> int:
        return len(self.weights)


def box_simplex_volume(d: int, s: RatLike) -> Fraction:
    if d < 1:
        raise DomainError("dimension must be at least 1")
    s = as_rat(s)
    if s <= 0:
        return Fraction(0)
    if s >= d:
        return Fraction(1)
    total = 0
    for j in range(min(math.floor(s), d) + 1):
        total += (-1) ** j * math.comb(d, j) * (s - j) ** d
    return Fraction(total) / math.factorial(d)


def box_simplex_complement(d: int, s: RatLike) -> Fraction:
    return 1 - box_simplex_volume(d, s)


def weighted_slab_volume(spec: SlabSpec) -> Fraction:
    d = spec.dim
    if d > MAX_SLAB_DIM:
        raise DomainError(f"inclusion-exclusion limited to d <= {MAX_SLAB_DIM}, got {d}")
    t, w = spec.threshold, spec.weights
    if t <= 0:
        return Fraction(0)
    if t >= sum(w):
        return Fraction(1)
    total = Fraction(0)
    for k in range(d + 1):
        sign = -1 if k % 2 else 1
        for subset in combinations(w, k):
            excess = t - sum(subset)
            if excess > 0:
                total += sign * excess ** d
    return total / (math.factorial(d) * math.prod(w))


def beta(d: int) -> Fraction:
    """Alternating binomial sum for the hypersurface constant."""
    if d < 0:
        raise DomainError("d must be non-negative")
    total = sum(
        (-1) ** l * (d + 1 - 2 * l) ** d * math.comb(d + 1, l) for l in range(d // 2 + 1)
    )
    return Fraction(total, 2 ** d * math.factorial(d))


def beta_via_volume(d: int) -> Fraction:
    """The same constant as the volume of the central slab of the cube."""
    if d < 1:
        raise DomainError("d must be at least 1")
    lo, hi = Fraction(d - 1, 2), Fraction(d + 1, 2)
    return 1 - box_simplex_volume(d, lo) - box_simplex_complement(d, hi)


_GL_NODES = 24


def _sin_power_tail(m: int, T: float) -> float:
    """Asymptotic value of the integral of (sin x / x)^m over [T, inf).

    ``T`` must be a multiple of pi.  ``sin^m`` is expanded in harmonics and
    each oscillatory term is integrated by parts; the neglected terms are
    O(T^-(m+2)).
    """
    k_half = round(T / math.pi)
    tail = 0.0
    scale = 2.0 ** (1 - m)
    if m % 2 == 0:
        const = math.comb(m, m // 2) / 2.0 ** m
        tail += const * T ** (1 - m) / (m - 1)
        for k in range(m // 2):
            j = m - 2 * k
            coef = scale * (-1) ** (m // 2 + k) * math.comb(m, k)
            cos_jt = (-1) ** (j * k_half)
            # int_T^inf cos(jx) x^-m dx = m cos(jT) / (j^2 T^(m+1)) + O(T^-(m+3))
            tail += coef * m * cos_jt / (j * j * T ** (m + 1))
    else:
        for k in range((m + 1) // 2):
            j = m - 2 * k
            coef = scale * (-1) ** ((m - 1) // 2 + k) * math.comb(m, k)
            cos_jt = (-1) ** (j * k_half)
            # int_T^inf sin(jx) x^-m dx = cos(jT) / (j T^m) + O(T^-(m+2))
            tail += coef * cos_jt / (j * T ** m)
    return tail


def beta_numeric(d: int, steps: int = 2000) -> float:
    """Quadrature of ``(1/pi) * integral (sin t / t)^(d+1) dt`` over the real line.

    The integral over ``[0, steps * pi]`` uses a 24-point Gauss-Legendre rule
    on each half period (error far below 1e-12 for the smooth integrand); the
    tail beyond ``T = steps * pi`` is replaced by its asymptotic expansion,
    whose truncation error is below ``T^-(d+3)``, i.e. under 1e-9 for
    ``steps >= 1000``.
    """
    if d < 0:
        raise DomainError("d must be non-negative")
    if steps < 1000:
        raise DomainError("steps must be at least 1000")
    m = d + 1
    nodes, weights = np.polynomial.legendre.leggauss(_GL_NODES)
    half = math.pi / 2
    starts = np.arange(steps) * math.pi + half
    x = (starts[:, None] + half * nodes[None, :]).ravel()
    w = np.tile(weights * half, steps)
    body = float(np.dot(w, np.sinc(x / math.pi) ** m))
    T = steps * math.pi
    return 2.0 * (body + _sin_power_tail(m, T)) / math.pi


def slab_grid_count(weights: Sequence[RatLike], threshold: RatLike, m: int) -> Fraction:
    """Fraction of midpoints ``(i + 1/2)/m`` of the cube grid inside the slab.

    An independent approximation of :func:`weighted_slab_volume` whose error is
    O(1/m); used as an oracle in tests.
    """
    w = np.array([float(as_rat(x)) for x in weights])
    t = float(as_rat(threshold))
    d = len(w)
    axis = (np.arange(m) + 0.5) / m
    grids = np.meshgrid(*([axis] * d), indexing="ij")
    acc = sum(wi * g for wi, g in zip(w, grids))
    return Fraction(int(np.count_nonzero(acc <= t + 1e-12)), m ** d)
