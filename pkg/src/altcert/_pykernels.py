"""Pure-Python kernels: cyclic Jacobi sweeps and all-pairs BFS.

This is the fallback used when the compiled extension is unavailable (or
when ``ALTCERT_PURE`` is set).  Both backends perform the same arithmetic
in the same order, so their outputs agree to the last bit on any IEEE-754
platform; only the speed differs.
"""

from __future__ import annotations

import math

import numpy as np


def off_norm(a: np.ndarray) -> float:
    """sqrt(2 * sum of squared strict-upper-triangle entries) of ``a``.

    Accumulated row-major so the compiled backend makes the identical
    convergence decisions.
    """
    n = a.shape[0]
    acc = 0.0
    for i in range(n - 1):
        row = a[i]
        for j in range(i + 1, n):
            v = row[j]
            acc += v * v
    return math.sqrt(2.0 * acc)


def jacobi_cycle(a: np.ndarray, tol_off: float, max_sweeps: int) -> tuple[int, float]:
    """Diagonalize the symmetric matrix ``a`` in place by cyclic Jacobi sweeps.

    Each sweep visits every pivot (p, q) with p < q in row-major order and
    annihilates the off-diagonal entry with a Givens rotation.  Returns
    ``(sweeps_used, final_off_norm)``; ``sweeps_used`` is -1 when the
    off-diagonal norm is still above ``tol_off`` after ``max_sweeps``.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = off_norm(a)
        if off <= tol_off:
            return sweep, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                rowp = a[p].copy()
                rowq = a[q].copy()
                newp = c * rowp - s * rowq
                newq = s * rowp + c * rowq
                a[p, :] = newp
                a[:, p] = newp
                a[q, :] = newq
                a[:, q] = newq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    off = off_norm(a)
    if off <= tol_off:
        return max_sweeps, off
    return -1, off


def bfs_single(n: int, indptr: np.ndarray, indices: np.ndarray, src: int,
               out: np.ndarray) -> None:
    """Fill ``out`` with BFS hop distances from ``src``; unreachable = -1."""
    out[:] = -1
    out[src] = 0
    queue = [src]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du = out[u] + 1
        for v in indices[indptr[u]:indptr[u + 1]]:
            if out[v] < 0:
                out[v] = du
                queue.append(int(v))


def bfs_all_pairs(n: int, indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """All-pairs BFS distance matrix (int32); unreachable pairs get -1."""
    dist = np.empty((n, n), dtype=np.int32)
    for src in range(n):
        bfs_single(n, indptr, indices, src, dist[src])
    return dist
