# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: cyclic Jacobi sweeps and all-pairs BFS.

Mirrors ``_pykernels`` operation for operation; see that module for the
contract.  Keep the two implementations in lockstep so the backends agree
bit for bit.
"""

from libc.math cimport fabs, sqrt

import numpy as np


def off_norm(double[:, ::1] a):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j
    cdef double acc = 0.0, v
    for i in range(n - 1):
        for j in range(i + 1, n):
            v = a[i, j]
            acc += v * v
    return sqrt(2.0 * acc)


def jacobi_cycle(double[:, ::1] a, double tol_off, int max_sweeps):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, j
    cdef int sweep
    cdef double off, apq, theta, t, c, s, app, aqq, ajp, ajq
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
                t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                for j in range(n):
                    ajp = a[j, p]
                    ajq = a[j, q]
                    a[j, p] = c * ajp - s * ajq
                    a[j, q] = s * ajp + c * ajq
                for j in range(n):
                    a[p, j] = a[j, p]
                    a[q, j] = a[j, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    off = off_norm(a)
    if off <= tol_off:
        return max_sweeps, off
    return -1, off


def bfs_single(Py_ssize_t n, int[::1] indptr, int[::1] indices, Py_ssize_t src,
               int[::1] out):
    cdef Py_ssize_t head = 0, tail = 0, u, k
    cdef int v, du
    cdef int[::1] queue = np.empty(n, dtype=np.int32)
    for k in range(n):
        out[k] = -1
    out[src] = 0
    queue[tail] = <int> src
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = out[u] + 1
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if out[v] < 0:
                out[v] = du
                queue[tail] = v
                tail += 1


def bfs_all_pairs(Py_ssize_t n, int[::1] indptr, int[::1] indices):
    dist = np.empty((n, n), dtype=np.int32)
    cdef int[:, ::1] dview = dist
    cdef Py_ssize_t src
    for src in range(n):
        bfs_single(n, indptr, indices, src, dview[src])
    return dist
