"""Row-by-row sparse elimination over F_p with a fill-in cap."""
from __future__ import annotations

from typing import Iterable

from ..errors import CapacityError


class SparseEchelon:
    """Incrementally maintained echelon basis of a row space over F_p.

    Rows are dicts ``{column: residue}``; the leading entry of a row is its
    smallest column.  Stored pivot rows are monic.
    """

    def __init__(self, p: int, max_nonzeros: int = 50_000_000):
        self.p = p
        self.max_nonzeros = max_nonzeros
        self.pivots: dict[int, dict[int, int]] = {}
        self.nonzeros = 0

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        p = self.p
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = min(row)
            basis = self.pivots.get(lead)
            if basis is None:
                return row
            f = row[lead]
            for c, v in basis.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row: dict[int, int]) -> bool:
        """Insert ``row``; return True when it enlarged the row space."""
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        inv = pow(row[lead], -1, self.p)
        row = {c: v * inv % self.p for c, v in row.items()}
        self.nonzeros += len(row)
        if self.nonzeros > self.max_nonzeros:
            raise CapacityError(
                f"sparse elimination exceeded {self.max_nonzeros} stored nonzeros",
                cap=self.max_nonzeros,
            )
        self.pivots[lead] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def sparse_rank_mod_p(rows: Iterable[dict[int, int]], p: int, max_nonzeros: int = 50_000_000) -> int:
    ech = SparseEchelon(p, max_nonzeros)
    for row in rows:
        ech.add(row)
    return ech.rank
