"""Elimination kernels over F_p.

The compiled Cython extension is used when it was built; otherwise, or when
``HKMULT_PURE_PYTHON=1`` is set, the numpy fallback is selected at import.
Both return identical results.
"""
from __future__ import annotations

import os

import numpy as np

from . import _fallback
from .sparse import SparseEchelon, sparse_rank_mod_p

try:
    if os.environ.get("HKMULT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python backend requested")
    from . import _ext
except ImportError:
    _ext = None

BACKEND = "cython" if _ext is not None else "python"
_impl = _ext if _ext is not None else _fallback


def echelon_mod_p(m: np.ndarray, p: int, backend: str | None = None) -> np.ndarray:
    """Row-reduce ``m`` in place (entries reduced mod p first); return pivot columns."""
    impl = _select(backend)
    if m.dtype != np.int64 or not m.flags.c_contiguous:
        raise TypeError("echelon_mod_p needs a C-contiguous int64 array")
    np.remainder(m, p, out=m)
    return impl.echelon_mod_p(m, p)


def rank_mod_p(m: np.ndarray, p: int, backend: str | None = None) -> int:
    if m.size == 0:
        return 0
    work = np.ascontiguousarray(m, dtype=np.int64).copy()
    return len(echelon_mod_p(work, p, backend))


def _select(backend):
    if backend is None:
        return _impl
    if backend == "python":
        return _fallback
    if backend == "cython":
        if _ext is None:
            raise ImportError("the compiled kernel extension is not built")
        return _ext
    raise ValueError(f"unknown backend {backend!r}")


__all__ = [
    "BACKEND",
    "SparseEchelon",
    "echelon_mod_p",
    "rank_mod_p",
    "sparse_rank_mod_p",
]
