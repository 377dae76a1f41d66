"""Kernel backend selection.

The compiled extension (``altcert._ckernels``) is preferred when it has
been built; otherwise the pure-Python implementation is used.  Setting the
environment variable ``ALTCERT_PURE`` to a non-empty value forces the pure
backend, which is handy for debugging and for the backend benchmark.
"""

from __future__ import annotations

import os

from altcert import _pykernels

try:
    from altcert import _ckernels
except ImportError:
    _ckernels = None

_FORCE_PURE = bool(os.environ.get("ALTCERT_PURE"))
_impl = _pykernels if (_FORCE_PURE or _ckernels is None) else _ckernels


def backend_name() -> str:
    return "pure" if _impl is _pykernels else "compiled"


def compiled_available() -> bool:
    return _ckernels is not None


def jacobi_cycle(a, tol_off: float, max_sweeps: int):
    return _impl.jacobi_cycle(a, tol_off, max_sweeps)


def bfs_all_pairs(n: int, indptr, indices):
    return _impl.bfs_all_pairs(n, indptr, indices)


def bfs_single(n: int, indptr, indices, src: int, out) -> None:
    _impl.bfs_single(n, indptr, indices, src, out)
