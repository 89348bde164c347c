"""Sparse multivariate polynomials over a prime field, and a small parser."""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Optional, Sequence

from ..errors import SpecParseError

Monomial = tuple[int, ...]


class FpPoly:
    """Polynomial over F_p stored as ``{exponent tuple: nonzero residue}``.

    Instances are treated as immutable.
    """

    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p: int, nvars: int, terms: Mapping[Monomial, int] = ()):
        self.p = p
        self.nvars = nvars
        clean = {}
        for mono, c in dict(terms).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has arity {len(mono)}, expected {nvars}")
            c %= p
            if c:
                clean[mono] = c
        self.terms = clean

    @classmethod
    def monomial(cls, p: int, exps: Sequence[int], coeff: int = 1) -> "FpPoly":
        return cls(p, len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, p: int, nvars: int, i: int) -> "FpPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls.monomial(p, exps)

    def __repr__(self):
        return f"FpPoly(p={self.p}, {self.terms!r})"

    def __eq__(self, other):
        return (
            isinstance(other, FpPoly)
            and (self.p, self.nvars) == (other.p, other.nvars)
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "FpPoly"):
        if (self.p, self.nvars) != (other.p, other.nvars):
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return FpPoly(self.p, self.nvars, out)

    def __neg__(self) -> "FpPoly":
        return FpPoly(self.p, self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def scale(self, c: int) -> "FpPoly":
        return FpPoly(self.p, self.nvars, {m: c * v for m, v in self.terms.items()})

    def mul(self, other: "FpPoly", q: Optional[int] = None) -> "FpPoly":
        """Product, dropping every monomial with an exponent >= q when q is given."""
        self._check(other)
        p = self.p
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if q is not None and max(m, default=0) >= q:
                    continue
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return FpPoly(p, self.nvars, out)

    __mul__ = mul

    def pow(self, e: int, q: Optional[int] = None) -> "FpPoly":
        """``self**e``, truncated modulo (x_1^q, ..., x_n^q) when q is given."""
        result = FpPoly.monomial(self.p, (0,) * self.nvars)
        base = self.truncate(q) if q is not None else self
        while e:
            if e & 1:
                result = result.mul(base, q)
            e >>= 1
            if e:
                base = base.mul(base, q)
        return result

    def truncate(self, q: int) -> "FpPoly":
        return FpPoly(self.p, self.nvars, {m: c for m, c in self.terms.items() if max(m, default=0) < q})

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {sum(w * a for w, a in zip(weights, m)) for m in self.terms}

    def is_homogeneous(self, weights: Optional[Sequence[int]] = None) -> bool:
        weights = weights or (1,) * self.nvars
        return len(self.weighted_degrees(weights)) <= 1

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    @property
    def order(self) -> int:
        """Lowest total degree of a term (the m-adic order); -1 for zero."""
        return min((sum(m) for m in self.terms), default=-1)

    def format(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(m), tuple(-a for a in m))):
            c = self.terms[mono]
            factors = [n if a == 1 else f"{n}^{a}" for n, a in zip(names, mono) if a]
            if c != 1 or not factors:
                factors.insert(0, str(c))
            parts.append("*".join(factors))
        return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][0-9]*)|(\^)|(\*)|([+-]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SpecParseError(f"unexpected character {text[pos]!r} in {text!r}")
        kind = ("num", "var", "pow", "mul", "sign")[m.lastindex - 1]
        out.append((kind, m.group(m.lastindex)))
        pos = m.end()
    return out


def discover_variables(texts: Iterable[str]) -> list[str]:
    """Variable names in order of first appearance."""
    seen: list[str] = []
    for text in texts:
        for kind, val in _tokenize(text):
            if kind == "var" and val not in seen:
                seen.append(val)
    return seen


def parse_poly(text: str, p: int, variables: Sequence[str]) -> FpPoly:
    """Parse ``'x^2 - 3*y*z + yz'``-style text over F_p.

    Variable names are one letter optionally followed by digits, so ``xy``
    reads as ``x*y`` and ``x0x1`` as ``x0*x1``; ``*`` is optional.
    """
    index = {name: i for i, name in enumerate(variables)}
    n = len(variables)
    tokens = _tokenize(text)
    if not tokens:
        raise SpecParseError("empty polynomial")
    terms: dict[Monomial, int] = {}
    i = 0
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "sign":
            sign = -sign if tokens[i][1] == "-" else sign
            i += 1
        coeff, exps, got = sign, [0] * n, False
        while i < len(tokens) and tokens[i][0] in ("num", "var", "mul"):
            kind, val = tokens[i]
            i += 1
            if kind == "mul":
                continue
            power = 1
            if i < len(tokens) and tokens[i][0] == "pow":
                if i + 1 >= len(tokens) or tokens[i + 1][0] != "num":
                    raise SpecParseError(f"'^' must be followed by an integer in {text!r}")
                power = int(tokens[i + 1][1])
                i += 2
            got = True
            if kind == "num":
                coeff *= int(val) ** power
            else:
                if val not in index:
                    raise SpecParseError(f"unknown variable {val!r}; ring has {list(variables)}")
                exps[index[val]] += power
        if not got:
            raise SpecParseError(f"malformed term in {text!r}")
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return FpPoly(p, n, terms)
