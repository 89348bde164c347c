"""Pure numpy versions of the compiled kernels."""
from __future__ import annotations

import numpy as np


def echelon_mod_p(m: np.ndarray, p: int) -> np.ndarray:
    """Forward-eliminate ``m`` in place over F_p; return the pivot columns."""
    nrows, ncols = m.shape
    rank = 0
    pivots = []
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(m[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            m[[rank, piv], col:] = m[[piv, rank], col:]
        inv = pow(int(m[rank, col]), -1, p)
        m[rank, col:] = (m[rank, col:] * inv) % p
        below = rank + 1 + np.flatnonzero(m[rank + 1:, col])
        if below.size:
            support = col + np.flatnonzero(m[rank, col:])
            factors = m[below, col][:, None]
            block = m[np.ix_(below, support)] - factors * m[rank, support][None, :]
            m[np.ix_(below, support)] = block % p
        pivots.append(col)
        rank += 1
    return np.asarray(pivots, dtype=np.int64)
