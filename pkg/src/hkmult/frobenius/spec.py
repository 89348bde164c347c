"""Ring specifications and their text format.

Grammar (whitespace is ignored everywhere)::

    spec     := kind '{' field (';' field)* ';'? '}'
    kind     := 'monomial' | 'quadric' | 'hypersurface' | 'scroll'
    field    := key '=' value

    monomial{p=3; vars=x,y; gens=x^2, x*y, y^3}
    quadric{p=3; d=3; phi=y^2+z^2+w^2}        ring k[x0, y, z, w]/(x0^2 - phi)
    hypersurface{p=5; f=x0^2+x1^3+x2^3+x3^3}
    scroll{n=1}                                 optional p=..

``vars=`` is optional; without it variables are numbered in order of first
appearance.  A quadric with fewer named variables than ``d`` gets extra
variables that phi does not involve.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional, Union

from ..closedforms import is_prime
from ..errors import SpecParseError
from .monomial import MonomialIdeal
from .poly import FpPoly, discover_variables, parse_poly


class RingKind(enum.Enum):
    MONOMIAL = "monomial"
    QUADRIC = "quadric"
    HYPERSURFACE = "hypersurface"
    SCROLL = "scroll"


Payload = Union[MonomialIdeal, FpPoly, int]


@dataclass(frozen=True)
class RingSpec:
    """A ring whose Frobenius colengths the engines know how to compute.

    ``variables`` counts the polynomial variables the payload lives in: the
    ideal's ring for monomial quotients, phi's variables (x0 excluded) for
    quadrics, f's variables for hypersurfaces, and 3 for the scroll.
    """

    kind: RingKind
    p: Optional[int]
    variables: int
    payload: Payload
    names: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        """Krull dimension of the ring."""
        if self.kind is RingKind.HYPERSURFACE:
            return self.variables - 1
        return self.variables

    def format(self) -> str:
        k = self.kind
        if k is RingKind.SCROLL:
            head = f"n={self.payload}" + (f"; p={self.p}" if self.p is not None else "")
            return f"scroll{{{head}}}"
        names = ",".join(self.names)
        if k is RingKind.MONOMIAL:
            gens = ", ".join(
                FpPoly.monomial(self.p, g).format(self.names) for g in self.payload.generators
            )
            return f"monomial{{p={self.p}; vars={names}; gens={gens}}}"
        if k is RingKind.QUADRIC:
            return f"quadric{{p={self.p}; d={self.variables}; vars={names}; phi={self.payload.format(self.names)}}}"
        return f"hypersurface{{p={self.p}; vars={names}; f={self.payload.format(self.names)}}}"

    def __str__(self):
        return self.format()


_SPEC = re.compile(r"^\s*([A-Za-z]+)\s*\{(.*)\}\s*$", re.S)
_ALLOWED = {
    RingKind.MONOMIAL: {"p", "vars", "gens"},
    RingKind.QUADRIC: {"p", "d", "vars", "phi"},
    RingKind.HYPERSURFACE: {"p", "vars", "f"},
    RingKind.SCROLL: {"n", "p"},
}
_REQUIRED = {
    RingKind.MONOMIAL: {"p", "gens"},
    RingKind.QUADRIC: {"p", "d", "phi"},
    RingKind.HYPERSURFACE: {"p", "f"},
    RingKind.SCROLL: {"n"},
}


def _int_field(fields, key) -> int:
    try:
        return int(fields[key].replace(" ", ""))
    except ValueError:
        raise SpecParseError(f"{key} must be an integer, got {fields[key]!r}") from None


def _prime_field(fields) -> int:
    p = _int_field(fields, "p")
    if not is_prime(p) or p == 2:
        raise SpecParseError(f"p must be an odd prime, got {p}")
    return p


def _names(fields, texts) -> list[str]:
    if "vars" in fields:
        names = [v.strip() for v in fields["vars"].split(",") if v.strip()]
        if len(set(names)) != len(names):
            raise SpecParseError("duplicate variable names")
        for v in names:
            if not re.fullmatch(r"[A-Za-z][0-9]*", v):
                raise SpecParseError(f"bad variable name {v!r}")
        return names
    return discover_variables(texts)


def parse_ring_spec(text: str) -> RingSpec:
    m = _SPEC.match(text)
    if not m:
        raise SpecParseError(f"expected kind{{key=value; ...}}, got {text!r}")
    try:
        kind = RingKind(m.group(1).lower())
    except ValueError:
        raise SpecParseError(
            f"unknown ring kind {m.group(1)!r}; expected one of {[k.value for k in RingKind]}"
        ) from None
    fields: dict[str, str] = {}
    for part in m.group(2).split(";"):
        if not part.strip():
            continue
        if "=" not in part:
            raise SpecParseError(f"field {part.strip()!r} is not key=value")
        key, value = part.split("=", 1)
        key = key.strip().lower()
        if key in fields:
            raise SpecParseError(f"duplicate field {key!r}")
        fields[key] = value.strip()
    unknown = set(fields) - _ALLOWED[kind]
    if unknown:
        raise SpecParseError(f"unknown field(s) {sorted(unknown)} for {kind.value}")
    missing = _REQUIRED[kind] - set(fields)
    if missing:
        raise SpecParseError(f"missing field(s) {sorted(missing)} for {kind.value}")

    if kind is RingKind.SCROLL:
        n = _int_field(fields, "n")
        if n < 0:
            raise SpecParseError("scroll parameter n must be >= 0")
        p = _prime_field(fields) if "p" in fields else None
        return RingSpec(kind, p, 3, n)

    p = _prime_field(fields)
    if kind is RingKind.MONOMIAL:
        texts = [g for g in fields["gens"].split(",") if g.strip()]
        if not texts:
            raise SpecParseError("gens is empty")
        names = _names(fields, texts)
        gens = []
        for t in texts:
            f = parse_poly(t, p, names)
            if len(f.terms) != 1 or next(iter(f.terms.values())) != 1:
                raise SpecParseError(f"{t.strip()!r} is not a monomial")
            gens.append(next(iter(f.terms)))
        return RingSpec(kind, p, len(names), MonomialIdeal(len(names), tuple(gens)), tuple(names))

    if kind is RingKind.QUADRIC:
        d = _int_field(fields, "d")
        if d < 1:
            raise SpecParseError("d must be at least 1")
        names = _names(fields, [fields["phi"]])
        if "x0" in names:
            raise SpecParseError("phi must not involve x0, which is the square-root variable")
        if len(names) > d:
            raise SpecParseError(f"phi uses {len(names)} variables but d = {d}")
        k = 1
        while len(names) < d:
            cand = f"u{k}"
            if cand not in names:
                names.append(cand)
            k += 1
        phi = parse_poly(fields["phi"], p, names)
        return RingSpec(kind, p, d, phi, tuple(names))

    names = _names(fields, [fields["f"]])
    if not names:
        raise SpecParseError("f has no variables")
    f = parse_poly(fields["f"], p, names)
    if not f:
        raise SpecParseError("f is zero mod p")
    return RingSpec(kind, p, len(names), f, tuple(names))
