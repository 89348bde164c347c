# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels over a prime field."""
import numpy as np
cimport numpy as cnp

ctypedef long long i64

cnp.import_array()


cdef inline i64 _inv_mod(i64 a, i64 p):
    cdef i64 t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


def echelon_mod_p(i64[:, ::1] m, i64 p):
    """Forward-eliminate ``m`` in place over F_p; return the pivot columns.

    Entries must already lie in ``[0, p)``.  Row ``k`` of the result has its
    leading one in column ``pivots[k]``.
    """
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t rank = 0, col, i, j, k, piv, nnz
    cdef i64 inv, f, v
    cdef i64[::1] support = np.empty(ncols, dtype=np.int64)
    pivots = []
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if m[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, ncols):
                v = m[rank, j]
                m[rank, j] = m[piv, j]
                m[piv, j] = v
        inv = _inv_mod(m[rank, col], p)
        nnz = 0
        for j in range(col, ncols):
            if m[rank, j] != 0:
                m[rank, j] = (m[rank, j] * inv) % p
                support[nnz] = j
                nnz += 1
        for i in range(rank + 1, nrows):
            f = m[i, col]
            if f == 0:
                continue
            f = p - f
            for k in range(nnz):
                j = support[k]
                m[i, j] = (m[i, j] + f * m[rank, j]) % p
        pivots.append(col)
        rank += 1
    return np.asarray(pivots, dtype=np.int64)
