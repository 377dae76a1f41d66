"""Weighted adjacency matrices, their spectra, and the eigenvalue mesh.

The central object is the degree-adjacency matrix: entry 1/sqrt(d_i d_j)
on every edge, zero elsewhere.  For a connected graph its largest
eigenvalue is 1, simple, with eigenvector (sqrt(d_1), ..., sqrt(d_n)), and
every eigenvalue lies in [-1, 1].  Subtracting it from the identity gives
the normalized Laplacian, whose spectrum is the mirror image 1 - lambda.

Eigenvalues are computed by a self-contained cyclic Jacobi rotation solver
(see ``_kernels``); dedupe of numerically-equal eigenvalues produces the
mesh on which the alternating polynomials are built.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from altcert import _kernels
from altcert.errors import NumericError
from altcert.graphs import Graph

KIND_DEGREE_ADJACENCY = "degree-adjacency"
KIND_CHUNG_LAPLACIAN = "chung-laplacian"
KIND_STANDARD = "standard-adjacency"

DEFAULT_CONVERGENCE_TOL = 1e-12
DEFAULT_DEDUP_TOL = 1e-8
DEFAULT_MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """All n eigenvalues of one matrix kind, sorted descending."""

    kind: str
    eigenvalues: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    def multiplicities(self, tol: float = DEFAULT_DEDUP_TOL) -> list[tuple[float, int]]:
        """Cluster numerically-equal eigenvalues; returns (mean, count) pairs."""
        out = []
        for cluster in _cluster_sorted(self.eigenvalues, tol):
            out.append((float(np.mean(cluster)), len(cluster)))
        return out


@dataclass(frozen=True)
class SpectralMesh:
    """Distinct non-Perron eigenvalues plus the evaluation point.

    For the degree-adjacency kind the points are sorted descending below
    the evaluation point 1; for the Laplacian kind they are sorted
    ascending above the evaluation point 0.  Either way ``points[0]`` is
    the mesh point nearest the evaluation point.
    """

    kind: str
    points: np.ndarray
    eval_point: float

    @property
    def b(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class PerronVector:
    """The eigenvector (sqrt(d_1), ..., sqrt(d_n)) of eigenvalue 1."""

    vector: np.ndarray


def degree_adjacency_matrix(g: Graph) -> np.ndarray:
    """Symmetric matrix with 1/sqrt(d_i d_j) on edges, zero elsewhere."""
    inv_sqrt = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=float))
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        w = inv_sqrt[u] * inv_sqrt[v]
        a[u, v] = w
        a[v, u] = w
    return a


def chung_laplacian(g: Graph) -> np.ndarray:
    """Identity minus the degree-adjacency matrix."""
    return np.eye(g.n) - degree_adjacency_matrix(g)


def standard_adjacency_matrix(g: Graph) -> np.ndarray:
    """Plain 0/1 adjacency matrix."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def perron_vector(g: Graph) -> PerronVector:
    return PerronVector(np.sqrt(np.asarray(g.degrees, dtype=float)))


def sym_eigenvalues(
    a: np.ndarray,
    kind: str,
    convergence_tol: float = DEFAULT_CONVERGENCE_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> Spectrum:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi sweeps.

    Convergence is declared when the off-diagonal Frobenius norm drops to
    ``convergence_tol * max(1, ||a||_F)``.  Deterministic for fixed input.
    Raises :class:`NumericError` with the residual norm if the sweep limit
    is exceeded.
    """
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if convergence_tol <= 0:
        raise ValueError("convergence_tol must be positive")
    work = np.array(a, dtype=float, copy=True, order="C")
    scale = float(np.sqrt(np.sum(work * work)))
    tol_off = convergence_tol * max(1.0, scale)
    sweeps, off = _kernels.jacobi_cycle(work, tol_off, max_sweeps)
    if sweeps < 0:
        raise NumericError(
            f"Jacobi diagonalization did not converge in {max_sweeps} sweeps; "
            f"residual off-diagonal norm {off:.3e}"
        )
    eigenvalues = np.sort(np.diagonal(work))[::-1].copy()
    eigenvalues.setflags(write=False)
    return Spectrum(kind=kind, eigenvalues=eigenvalues)


def spectrum_of(
    g: Graph,
    kind: str = KIND_DEGREE_ADJACENCY,
    convergence_tol: float = DEFAULT_CONVERGENCE_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> Spectrum:
    """Eigenvalues of the selected matrix of ``g``."""
    if kind == KIND_DEGREE_ADJACENCY:
        a = degree_adjacency_matrix(g)
    elif kind == KIND_CHUNG_LAPLACIAN:
        a = chung_laplacian(g)
    elif kind == KIND_STANDARD:
        a = standard_adjacency_matrix(g)
    else:
        raise ValueError(f"unknown matrix kind {kind!r}")
    return sym_eigenvalues(a, kind, convergence_tol, max_sweeps)


def _cluster_sorted(values: np.ndarray, tol: float) -> list[np.ndarray]:
    """Chain-cluster a monotone array: consecutive gaps <= tol merge."""
    clusters = []
    start = 0
    for i in range(1, len(values)):
        if abs(values[i] - values[i - 1]) > tol:
            clusters.append(values[start:i])
            start = i
    clusters.append(values[start:])
    return clusters


def extract_mesh(s: Spectrum, dedup_tol: float = DEFAULT_DEDUP_TOL) -> SpectralMesh:
    """Remove the Perron eigenvalue and merge numerically-equal ones.

    Merged mesh points take the arithmetic mean of their cluster.  Raises
    :class:`NumericError` when the Perron value (1 for degree-adjacency, 0
    for the Laplacian) is missing or not numerically simple, which signals
    a disconnected graph or an eigensolver failure.
    """
    if dedup_tol <= 0:
        raise ValueError("dedup_tol must be positive")
    if s.kind == KIND_DEGREE_ADJACENCY:
        perron, eigs = 1.0, s.eigenvalues            # descending, Perron first
    elif s.kind == KIND_CHUNG_LAPLACIAN:
        perron, eigs = 0.0, s.eigenvalues[::-1]      # ascending, Perron first
    else:
        raise ValueError(f"no mesh convention for matrix kind {s.kind!r}")
    if len(eigs) < 2:
        raise NumericError("spectrum too small to carry a mesh")
    if abs(eigs[0] - perron) > dedup_tol:
        raise NumericError(
            f"expected Perron eigenvalue {perron} but found {eigs[0]!r}; "
            "the graph may be disconnected or the eigensolver failed"
        )
    if abs(eigs[1] - eigs[0]) <= dedup_tol:
        raise NumericError(
            "Perron eigenvalue is not numerically simple; the graph may be "
            "disconnected or the eigensolver failed"
        )
    rest = eigs[1:]
    points = np.array(
        [float(np.mean(c)) for c in _cluster_sorted(rest, dedup_tol)]
    )
    points.setflags(write=False)
    return SpectralMesh(kind=s.kind, points=points, eval_point=perron)


def mesh_of(
    g: Graph,
    kind: str = KIND_DEGREE_ADJACENCY,
    convergence_tol: float = DEFAULT_CONVERGENCE_TOL,
    dedup_tol: float = DEFAULT_DEDUP_TOL,
) -> SpectralMesh:
    """Spectrum plus mesh extraction in one call."""
    return extract_mesh(spectrum_of(g, kind, convergence_tol), dedup_tol)
