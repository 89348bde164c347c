"""Exact colengths ``dim_k k[x]/(f_1, ..., f_m, x_1^q, ..., x_n^q)`` over F_p.

Everything happens inside the truncated algebra
``B = F_p[x_1..x_n]/(x_1^q, ..., x_n^q)``, which has the q^n monomials with
exponents below q as a basis.  The image of an ideal ``(f_1..f_m)`` in ``B``
is spanned by the truncated products ``u * f_j`` over monomials ``u`` of
``B``, so the colength is ``q^n`` minus the rank of that Macaulay matrix.
When the generators are homogeneous for some positive weight vector, the
matrix splits into one block per weighted degree, and each block is
eliminated on its own.

Quadric reduction
-----------------
For ``A = F_p[x_0, x_1..x_d]/(x_0^2 - phi)`` with p odd and q = p^e,
``A/(x_0^q, x_1^q, ..., x_d^q)`` is ``B + B*x_0`` modulo the ideal generated
by ``x_0^q = x_0 * phi^m``, where ``m = (q - 1)/2`` and
``B = F_p[x_1..x_d]/(x_i^q)``.  Multiplying ``x_0 phi^m`` by ``b + c x_0``
gives ``c phi^(m+1) + b phi^m x_0``, so that ideal is
``phi^(m+1) B + phi^m B x_0`` and

    length = len(B / phi^(m+1) B) + len(B / phi^m B).

Each term is ``q^d`` minus the rank of multiplication by a power of phi on B.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .. import kernels
from ..errors import CapacityError, CharacteristicError, DomainError
from .poly import FpPoly

# q^n monomials of the truncated algebra are materialised as an index table.
DEFAULT_MAX_MONOMIALS = 2_000_000
# Blocks larger than this many entries are eliminated sparsely.
DEFAULT_DENSE_ENTRIES = 16_000_000
DEFAULT_SPARSE_NONZEROS = 60_000_000


@dataclass
class Limits:
    max_monomials: int = DEFAULT_MAX_MONOMIALS
    dense_entries: int = DEFAULT_DENSE_ENTRIES
    sparse_nonzeros: int = DEFAULT_SPARSE_NONZEROS


def is_power_of(q: int, p: int) -> bool:
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def find_grading(polys: Sequence[FpPoly], nvars: int) -> Optional[tuple[int, ...]]:
    """Positive integer weights making every polynomial weighted-homogeneous.

    Standard grading is tried first; otherwise a small linear program looks
    for any positive solution, which is then verified exactly.  Returns None
    when no grading exists.
    """
    ones = (1,) * nvars
    if all(f.is_homogeneous(ones) for f in polys):
        return ones
    rows = []
    for f in polys:
        monos = list(f.terms)
        for m in monos[1:]:
            rows.append([a - b for a, b in zip(m, monos[0])])
    from scipy.optimize import linprog

    res = linprog(
        c=np.ones(nvars),
        A_eq=np.array(rows, dtype=float),
        b_eq=np.zeros(len(rows)),
        bounds=[(1, None)] * nvars,
        method="highs",
    )
    if res.status != 0:
        return None
    fracs = [Fraction(float(w)).limit_denominator(10_000) for w in res.x]
    scale = math.lcm(*(fr.denominator for fr in fracs))
    weights = [int(fr * scale) for fr in fracs]
    g = math.gcd(*weights)
    weights = tuple(w // g for w in weights)
    if min(weights) < 1 or not all(f.is_homogeneous(weights) for f in polys):
        return None
    return weights


class TruncatedAlgebra:
    """Monomial basis of ``F_p[x_1..x_n]/(x_i^q)`` graded by a weight vector."""

    def __init__(self, nvars: int, q: int, weights: Optional[Sequence[int]], limits: Limits):
        size = q ** nvars
        if size > limits.max_monomials:
            raise CapacityError(
                f"truncated algebra has {size} monomials, cap is {limits.max_monomials}",
                cap=limits.max_monomials,
            )
        self.nvars, self.q, self.size = nvars, q, size
        self.exps = np.indices((q,) * nvars, dtype=np.int64).reshape(nvars, -1).T
        if nvars == 0:
            self.exps = np.zeros((1, 0), dtype=np.int64)
        self.graded = weights is not None
        self.weights = tuple(weights) if weights is not None else (0,) * nvars
        w = np.asarray(self.weights, dtype=np.int64)
        self.wdeg = self.exps @ w if nvars else np.zeros(1, dtype=np.int64)
        self.local = np.full(size, -1, dtype=np.int64)

    def degrees(self) -> np.ndarray:
        return np.unique(self.wdeg)

    def block_columns(self, degree: int) -> np.ndarray:
        """Monomials of one weighted degree, in decreasing degrevlex order."""
        cols = np.flatnonzero(self.wdeg == degree)
        e = self.exps[cols]
        keys = [e[:, i] for i in range(self.nvars)] + [-e.sum(axis=1)]
        return cols[np.lexsort(keys)] if self.nvars else cols

    def ravel(self, exps: np.ndarray) -> np.ndarray:
        if self.nvars == 0:
            return np.zeros(len(exps), dtype=np.int64)
        return np.ravel_multi_index(exps.T, (self.q,) * self.nvars)


def truncated_power(f: FpPoly, e: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Terms of ``f^e`` modulo ``(x_i^q)`` as (exponent rows, coefficients).

    Multiplies by f one factor at a time on a dense q^n array, which costs
    O(e * terms(f) * q^n) and avoids the quadratic term blow-up of sparse
    squaring once the power becomes dense.
    """
    n, p = f.nvars, f.p
    cur = np.zeros((q,) * n, dtype=np.int64)
    cur[(0,) * n] = 1
    f = f.truncate(q)
    for _ in range(e):
        nxt = np.zeros_like(cur)
        for mono, c in f.terms.items():
            dst = tuple(slice(a, q) for a in mono)
            src = tuple(slice(0, q - a) for a in mono)
            nxt[dst] += c * cur[src]
        cur = nxt % p
    idx = np.nonzero(cur)
    return np.stack(idx, axis=1).astype(np.int64).reshape(-1, n), cur[idx]


def _poly_arrays(f) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(f, tuple):
        return f
    monos = list(f.terms)
    exps = np.array(monos, dtype=np.int64).reshape(len(monos), f.nvars)
    coefs = np.array([f.terms[m] for m in monos], dtype=np.int64)
    return exps, coefs


@dataclass
class Block:
    degree: int
    columns: np.ndarray
    rank: int = 0
    pivots: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))
    echelon: Optional[np.ndarray] = None
    sparse: Optional[kernels.SparseEchelon] = None


def _block_triples(alg: TruncatedAlgebra, polys, degree: int):
    """(row, col, coefficient) triples of the Macaulay block in one degree."""
    rows, cols, vals = [], [], []
    offset = 0
    for f, fdeg, (texps, tcoefs) in polys:
        if alg.graded:
            src = np.flatnonzero(alg.wdeg == degree - fdeg)
        else:
            src = np.arange(alg.size)
        if src.size == 0:
            continue
        base = alg.exps[src]
        local_rows = np.arange(src.size, dtype=np.int64) + offset
        for t, c in zip(texps, tcoefs):
            tgt = base + t
            ok = np.all(tgt < alg.q, axis=1)
            if not ok.any():
                continue
            cols.append(alg.local[alg.ravel(tgt[ok])])
            rows.append(local_rows[ok])
            vals.append(np.full(int(ok.sum()), c, dtype=np.int64))
        offset += src.size
    if not rows:
        return offset, np.empty(0, np.int64), np.empty(0, np.int64), np.empty(0, np.int64)
    return offset, np.concatenate(rows), np.concatenate(cols), np.concatenate(vals)


def eliminate_blocks(
    alg: TruncatedAlgebra,
    polys: Sequence[FpPoly],
    p: int,
    limits: Limits,
    keep_echelon: bool = False,
    backend: Optional[str] = None,
) -> list[Block]:
    """Row-reduce the image of ``(polys)`` in ``alg``, block by weighted degree."""
    prepared = []
    w = np.asarray(alg.weights, dtype=np.int64)
    for f in polys:
        exps, coefs = _poly_arrays(f)
        if not len(coefs):
            continue
        degs = set((exps @ w).tolist()) if alg.graded else {0}
        if len(degs) != 1:
            raise DomainError("generator is not homogeneous for the chosen grading")
        prepared.append((f, degs.pop(), (exps, coefs)))
    degrees = alg.degrees() if alg.graded else np.array([0])
    blocks = []
    for degree in degrees:
        cols = alg.block_columns(int(degree)) if alg.graded else _all_columns(alg)
        alg.local[cols] = np.arange(cols.size)
        nrows, r, c, v = _block_triples(alg, prepared, int(degree))
        block = Block(int(degree), cols)
        if nrows and r.size:
            if nrows * cols.size <= limits.dense_entries:
                mat = np.zeros((nrows, cols.size), dtype=np.int64)
                np.add.at(mat, (r, c), v)
                block.pivots = kernels.echelon_mod_p(mat, p, backend)
                block.rank = len(block.pivots)
                if keep_echelon:
                    block.echelon = mat[: block.rank].copy()
            else:
                ech = kernels.SparseEchelon(p, limits.sparse_nonzeros)
                order = np.argsort(r, kind="stable")
                r, c, v = r[order], c[order], v[order]
                bounds = np.searchsorted(r, np.arange(nrows + 1))
                for i in range(nrows):
                    lo, hi = bounds[i], bounds[i + 1]
                    if lo < hi:
                        row: dict[int, int] = {}
                        for cc, vv in zip(c[lo:hi].tolist(), v[lo:hi].tolist()):
                            row[cc] = row.get(cc, 0) + vv
                        ech.add(row)
                block.pivots = np.array(sorted(ech.pivots), dtype=np.int64)
                block.rank = ech.rank
                if keep_echelon:
                    block.sparse = ech
        alg.local[cols] = -1
        blocks.append(block)
    return blocks


def _all_columns(alg: TruncatedAlgebra) -> np.ndarray:
    e = alg.exps
    keys = [e[:, i] for i in range(alg.nvars)] + [-e.sum(axis=1)]
    return np.lexsort(keys).astype(np.int64) if alg.nvars else np.arange(alg.size)


def truncated_colength(
    p: int,
    nvars: int,
    polys: Sequence[FpPoly],
    q: int,
    limits: Optional[Limits] = None,
    backend: Optional[str] = None,
) -> int:
    """``dim F_p[x]/(polys, x_1^q, ..., x_n^q)``."""
    limits = limits or Limits()
    polys = [f.truncate(q) for f in polys]
    polys = [f for f in polys if f]
    weights = find_grading(polys, nvars) if polys else (1,) * nvars
    alg = TruncatedAlgebra(nvars, q, weights, limits)
    if not polys:
        return alg.size
    blocks = eliminate_blocks(alg, polys, p, limits, backend=backend)
    return alg.size - sum(b.rank for b in blocks)


def colength_general(
    p: int,
    gens: Sequence[FpPoly],
    q: int,
    nvars: Optional[int] = None,
    limits: Optional[Limits] = None,
    backend: Optional[str] = None,
) -> int:
    """Colength of ``(gens) + (x_1^q, ..., x_n^q)`` in ``F_p[x_1..x_n]``.

    Columns are ordered by degree-reverse-lexicographic order, so the pivot
    columns of the echelon form are the leading monomials of the ideal.
    """
    if q < 1:
        raise DomainError("q must be at least 1")
    if nvars is None:
        if not gens:
            raise DomainError("nvars is required when there are no generators")
        nvars = gens[0].nvars
    for g in gens:
        if g.p != p or g.nvars != nvars:
            raise DomainError("generators must share the characteristic and the variable count")
    return truncated_colength(p, nvars, gens, q, limits, backend)


class QuotientBasis:
    """Echelon basis of the ideal image in B, for normal forms and standard monomials."""

    def __init__(self, p: int, gens: Sequence[FpPoly], q: int, nvars: Optional[int] = None,
                 limits: Optional[Limits] = None):
        self.p, self.q = p, q
        self.nvars = nvars if nvars is not None else gens[0].nvars
        limits = limits or Limits()
        polys = [f.truncate(q) for f in gens if f.truncate(q)]
        self.weights = find_grading(polys, self.nvars) if polys else (1,) * self.nvars
        self.alg = TruncatedAlgebra(self.nvars, q, self.weights, limits)
        self.blocks = eliminate_blocks(self.alg, polys, p, limits, keep_echelon=True) if polys else []
        self._leading = set()
        for b in self.blocks:
            self._leading.update(int(b.columns[i]) for i in b.pivots)

    @property
    def colength(self) -> int:
        return self.alg.size - len(self._leading)

    def standard_monomials(self) -> list[tuple[int, ...]]:
        return [
            tuple(int(a) for a in self.alg.exps[i])
            for i in range(self.alg.size)
            if i not in self._leading
        ]

    def normal_form(self, f: FpPoly) -> FpPoly:
        """Unique representative of ``f`` supported on standard monomials."""
        p, alg = self.p, self.alg
        f = f.truncate(self.q)
        out: dict[tuple[int, ...], int] = {}
        by_block: dict[int, dict[int, int]] = {}
        for mono, c in f.terms.items():
            idx = int(alg.ravel(np.array([mono], dtype=np.int64))[0])
            by_block.setdefault(int(alg.wdeg[idx]), {})[idx] = c
        blocks = {b.degree: b for b in self.blocks}
        for degree, coeffs in by_block.items():
            block = blocks.get(degree)
            if block is not None and block.sparse is not None:
                pos = {int(g): k for k, g in enumerate(block.columns)}
                row = _full_reduce(block.sparse, {pos[i]: c for i, c in coeffs.items()})
                for k, c in row.items():
                    out[tuple(int(a) for a in alg.exps[block.columns[k]])] = c
                continue
            if block is None or block.echelon is None or block.rank == 0:
                for idx, c in coeffs.items():
                    out[tuple(int(a) for a in alg.exps[idx])] = c
                continue
            pos = {int(g): k for k, g in enumerate(block.columns)}
            vec = np.zeros(block.columns.size, dtype=np.int64)
            for idx, c in coeffs.items():
                vec[pos[idx]] = c % p
            for row, col in zip(block.echelon, block.pivots):
                if vec[col]:
                    vec = (vec - vec[col] * row) % p
            for k in np.flatnonzero(vec):
                out[tuple(int(a) for a in alg.exps[block.columns[k]])] = int(vec[k])
        return FpPoly(p, self.nvars, out)


def _full_reduce(ech: "kernels.SparseEchelon", row: dict[int, int]) -> dict[int, int]:
    # eliminate every pivot column, not only the leading one
    p = ech.p
    row = {c: v % p for c, v in row.items() if v % p}
    done = -1
    while True:
        todo = [c for c in row if c > done and c in ech.pivots]
        if not todo:
            return row
        col = min(todo)
        f = row[col]
        for c, v in ech.pivots[col].items():
            nv = (row.get(c, 0) - f * v) % p
            if nv:
                row[c] = nv
            else:
                row.pop(c, None)
        done = col


def principal_colength(p: int, f: FpPoly, q: int, limits: Optional[Limits] = None,
                       backend: Optional[str] = None, power: int = 1) -> int:
    """``len(B / f^power B)`` for ``B = F_p[x_1..x_n]/(x_i^q)``."""
    limits = limits or Limits()
    n = f.nvars
    # a grading of f is one of f^power; without one the power is re-examined
    weights = find_grading([f], n) if f else (1,) * n
    alg = TruncatedAlgebra(n, q, weights, limits)
    exps, coefs = truncated_power(f, power, q)
    if not len(coefs):
        return alg.size
    if weights is None:
        g = FpPoly(p, n, {tuple(r): int(c) for r, c in zip(exps.tolist(), coefs.tolist())})
        alg = TruncatedAlgebra(n, q, find_grading([g], n), limits)
    blocks = eliminate_blocks(alg, [(exps, coefs)], p, limits, backend=backend)
    return alg.size - sum(b.rank for b in blocks)


def colength_quadric(spec, q: int, limits: Optional[Limits] = None, backend: Optional[str] = None) -> int:
    """Length of ``A/(x_0^q, ..., x_d^q)`` for ``A = F_p[x_0..x_d]/(x_0^2 - phi)``.

    Uses the splitting described in the module docstring; ``spec`` is a
    quadric :class:`~hkmult.frobenius.spec.RingSpec`.
    """
    from .spec import RingKind

    if spec.kind is not RingKind.QUADRIC:
        raise DomainError(f"colength_quadric needs a quadric spec, got {spec.kind.value}")
    p, phi = spec.p, spec.payload
    if p == 2:
        raise CharacteristicError("the quadric reduction needs odd characteristic")
    if not is_power_of(q, p):
        raise DomainError(f"q = {q} is not a power of p = {p}")
    if phi and phi.order < 2:
        raise DomainError("phi must lie in the square of the maximal ideal")
    m = (q - 1) // 2
    hi = principal_colength(p, phi, q, limits, backend, power=m + 1)
    lo = principal_colength(p, phi, q, limits, backend, power=m)
    return hi + lo
