"""Colength sequences ``l(A/m^[q])`` and their extrapolated limits."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..errors import DomainError
from .engines import Limits, colength_general, colength_quadric, is_power_of
from .monomial import frobenius_power, monomial_colength
from .spec import RingKind, RingSpec

FIT_WINDOW = 3


def fit_leading(points: Sequence[tuple[int, int]], d: int) -> Fraction:
    """Least-squares alpha for ``length = alpha q^d + beta q^(d-1)``, exactly.

    With a single point the lower term is dropped.
    """
    if not points:
        raise DomainError("no points to fit")
    if len(points) == 1:
        q, n = points[0]
        return Fraction(n, q ** d)
    # normal equations for the two columns u = q^d, v = q^(d-1)
    suu = sum(Fraction(q ** d) ** 2 for q, _ in points)
    svv = sum(Fraction(q ** (d - 1)) ** 2 for q, _ in points)
    suv = sum(Fraction(q ** d) * q ** (d - 1) for q, _ in points)
    syu = sum(Fraction(n) * q ** d for q, n in points)
    syv = sum(Fraction(n) * q ** (d - 1) for q, n in points)
    det = suu * svv - suv * suv
    if det == 0:
        raise DomainError("fit is degenerate: q values must be distinct")
    return (syu * svv - syv * suv) / det


@dataclass(frozen=True)
class ColengthSequence:
    dim: int
    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        qs = [q for q, _ in self.points]
        if any(a >= b for a, b in zip(qs, qs[1:])):
            raise DomainError("q values must be strictly increasing")

    @property
    def ratios(self) -> list[Fraction]:
        return [Fraction(n, q ** self.dim) for q, n in self.points]

    @property
    def estimate(self) -> Fraction:
        return fit_leading(self.points[-FIT_WINDOW:], self.dim)


def colength(spec: RingSpec, q: int, limits: Optional[Limits] = None, backend: Optional[str] = None) -> int:
    """``l(A/m^[q])`` for the ring described by ``spec``."""
    kind = spec.kind
    if kind is RingKind.MONOMIAL:
        return monomial_colength(frobenius_power(spec.payload, q))
    if kind is RingKind.QUADRIC:
        return colength_quadric(spec, q, limits, backend)
    if kind is RingKind.HYPERSURFACE:
        return colength_general(spec.p, [spec.payload], q, limits=limits, backend=backend)
    from ..toric import scroll_colength

    return scroll_colength(spec.payload, q)


def hk_estimate(
    spec: RingSpec,
    q_list: Sequence[int],
    limits: Optional[Limits] = None,
    backend: Optional[str] = None,
) -> ColengthSequence:
    """Exact colengths along ``q_list`` and the fitted Hilbert-Kunz estimate.

    A monomial quotient ``k[x]/I`` is read as the colength of ``I^[q]`` in the
    polynomial ring, i.e. the Hilbert-Kunz multiplicity of the ideal ``I``.
    """
    q_list = list(q_list)
    if not q_list:
        raise DomainError("q_list is empty")
    if any(a >= b for a, b in zip(q_list, q_list[1:])):
        raise DomainError("q_list must be strictly increasing")
    if spec.p is not None:
        bad = [q for q in q_list if not is_power_of(q, spec.p)]
        if bad:
            raise DomainError(f"{bad} are not powers of p = {spec.p}")
    elif min(q_list) < 1:
        raise DomainError("q values must be positive")
    points = tuple((q, colength(spec, q, limits, backend)) for q in q_list)
    return ColengthSequence(spec.dim, points)
