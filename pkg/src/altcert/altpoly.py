"""k-alternating polynomials of an eigenvalue mesh.

For a mesh x_1 > ... > x_b and an evaluation point e > x_1, the degree-k
alternating polynomial maximizes P(e) over all polynomials of degree <= k
whose absolute value stays within 1 on every mesh point.  The optimum is
unique, independent of e, has degree exactly k, attains k+1 alternating
values +-1 on the mesh, and grows strictly with k.

The LP is solved in value space: the decision variables are the b mesh
values y_j with box |y_j| <= 1, the degree cap is imposed through vanishing
Newton divided differences of orders k+1..b-1, and the objective is the
Lagrange extrapolation of y to the evaluation point.  This avoids the
Vandermonde conditioning problems of a monomial parameterization.

Laplacian-side meshes (evaluation point 0 below an ascending mesh) are
handled by reflecting x -> -x, solving the standard problem, and reading
the values back; the extremal value is unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from altcert.errors import NumericError
from altcert.simplex import LPProblem, LPSolution, simplex_solve
from altcert.spectral import KIND_CHUNG_LAPLACIAN, SpectralMesh

ALTERNATION_TOL = 1e-6


@dataclass(frozen=True)
class AlternatingPolynomial:
    """A solved degree-k alternating polynomial on a fixed mesh.

    ``values_at_mesh`` are the optimal mesh values y_j (clipped into
    [-1, 1]); ``newton_coefficients`` give the interpolant of those values
    in Newton form on the mesh points, which is how the polynomial is
    evaluated anywhere else.
    """

    k: int
    mesh: SpectralMesh
    values_at_mesh: np.ndarray
    extremal_value: float
    newton_coefficients: np.ndarray

    @property
    def sup_norm_on_mesh(self) -> float:
        return float(np.max(np.abs(self.values_at_mesh)))

    @property
    def alternation_count(self) -> int:
        """Number of alternating sign blocks among near-extreme mesh values."""
        return _alternation_count(self.values_at_mesh)

    def evaluate(self, x: float) -> float:
        """Evaluate via Newton-Horner on the mesh points."""
        pts = self.mesh.points
        c = self.newton_coefficients
        acc = c[-1]
        for r in range(len(c) - 2, -1, -1):
            acc = acc * (x - pts[r]) + c[r]
        return float(acc)

    __call__ = evaluate


def _alternation_count(values: np.ndarray, tol: float = ALTERNATION_TOL) -> int:
    signs = []
    for y in values:
        if abs(y) >= 1.0 - tol:
            signs.append(1 if y > 0 else -1)
    if not signs:
        return 0
    blocks = 1
    for prev, cur in zip(signs, signs[1:]):
        if cur != prev:
            blocks += 1
    return blocks


def _newton_coefficients(points: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Divided-difference coefficients of the interpolant of (points, values)."""
    c = np.array(values, dtype=float)
    n = len(c)
    for order in range(1, n):
        for i in range(n - 1, order - 1, -1):
            c[i] = (c[i] - c[i - 1]) / (points[i] - points[i - order])
    return c


def _lagrange_weights(points: np.ndarray, at: float) -> np.ndarray:
    """l_j(at) for the Lagrange basis on ``points``, as interleaved ratio
    products so clustered meshes do not overflow."""
    b = len(points)
    w = np.empty(b)
    for i in range(b):
        acc = 1.0
        for j in range(b):
            if j != i:
                acc *= (at - points[j]) / (points[i] - points[j])
        w[i] = acc
    return w


def _lp_points(mesh: SpectralMesh) -> tuple[np.ndarray, float]:
    """Mesh coordinates for the LP: reflect Laplacian meshes so the
    evaluation point always sits above a descending mesh."""
    if mesh.kind == KIND_CHUNG_LAPLACIAN:
        return -mesh.points, -mesh.eval_point
    return mesh.points, mesh.eval_point


def lp_problem_for(mesh: SpectralMesh, k: int, eval_point: float | None = None) -> LPProblem:
    """The value-space LP whose optimum is the degree-k alternating polynomial.

    ``eval_point`` overrides the mesh's own evaluation point (it must stay
    strictly above the working mesh); the optimal mesh values do not depend
    on it.
    """
    pts, ev = _lp_points(mesh)
    if eval_point is not None:
        ev = eval_point
    b = len(pts)
    if ev <= pts[0]:
        raise ValueError(
            f"evaluation point {ev} must lie strictly above the mesh maximum {pts[0]}"
        )
    objective = _lagrange_weights(pts, ev)
    rows = []
    for order in range(k + 1, b):
        w = np.zeros(b)
        for i in range(order + 1):
            prod = 1.0
            for j in range(order + 1):
                if j != i:
                    prod *= pts[i] - pts[j]
            w[i] = 1.0 / prod
        w /= np.max(np.abs(w))
        rows.append(w)
    a_eq = np.vstack(rows) if rows else np.zeros((0, b))
    return LPProblem.box(
        c=objective,
        lower=-np.ones(b),
        upper=np.ones(b),
        a_eq=a_eq,
        b_eq=np.zeros(len(rows)),
        maximize=True,
    )


def alternating_polynomial(mesh: SpectralMesh, k: int) -> AlternatingPolynomial:
    """Solve for the degree-k alternating polynomial of ``mesh``.

    k = 0 returns the constant 1 without a solve.  The LP is bounded and
    feasible by construction, so any other solver status is an internal
    error.
    """
    b = mesh.b
    if not 0 <= k <= b - 1:
        raise ValueError(f"degree k={k} out of range 0..{b - 1}")
    if k == 0:
        values = np.ones(b)
        return AlternatingPolynomial(
            k=0,
            mesh=mesh,
            values_at_mesh=values,
            extremal_value=1.0,
            newton_coefficients=_newton_coefficients(mesh.points, values),
        )
    lp = lp_problem_for(mesh, k)
    sol = simplex_solve(lp)
    if sol.status != "optimal":
        raise NumericError(
            f"alternating-polynomial LP ended with status {sol.status!r} "
            f"(b={b}, k={k}); this indicates a formulation bug"
        )
    values = np.clip(sol.x, -1.0, 1.0)
    extremal = float(np.dot(lp.c, values))
    return AlternatingPolynomial(
        k=k,
        mesh=mesh,
        values_at_mesh=values,
        extremal_value=extremal,
        newton_coefficients=_newton_coefficients(mesh.points, values),
    )


def polynomial_table(mesh: SpectralMesh) -> list[AlternatingPolynomial]:
    """All alternating polynomials of the mesh, k = 0..b-1."""
    return [alternating_polynomial(mesh, k) for k in range(mesh.b)]


def closed_form_linear(mesh: SpectralMesh) -> AlternatingPolynomial:
    """The degree-1 alternating polynomial in closed form.

    P_1(x) = (2x - x_first - x_last) / (x_first - x_last), which attains +1
    at the mesh point nearest the evaluation point and -1 at the farthest;
    the same expression covers both mesh orientations.
    """
    if mesh.b < 2:
        raise ValueError("closed-form linear polynomial needs a mesh with b >= 2")
    pts = mesh.points
    near, far = float(pts[0]), float(pts[-1])
    values = (2.0 * pts - near - far) / (near - far)
    extremal = (2.0 * mesh.eval_point - near - far) / (near - far)
    return AlternatingPolynomial(
        k=1,
        mesh=mesh,
        values_at_mesh=values,
        extremal_value=float(extremal),
        newton_coefficients=_newton_coefficients(pts, values),
    )


def alternating_interpolant_value(mesh: SpectralMesh) -> float:
    """Extremal value of the full-degree polynomial, by direct interpolation.

    Interpolating the alternating pattern +1, -1, +1, ... through all b
    mesh points and evaluating at the evaluation point gives
    sum_i prod_{j != i} |e - x_j| / |x_i - x_j|, an independent closed form
    used to cross-check the LP at k = b-1.
    """
    pts, ev = _lp_points(mesh)
    b = len(pts)
    total = 0.0
    for i in range(b):
        acc = 1.0
        for j in range(b):
            if j != i:
                acc *= abs(ev - pts[j]) / abs(pts[i] - pts[j])
        total += acc
    return total


def matrix_polynomial(coefficients: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Evaluate a monomial-coefficient polynomial at a square matrix (Horner)."""
    coefficients = np.asarray(coefficients, dtype=float)
    n = a.shape[0]
    acc = coefficients[-1] * np.eye(n)
    for c in coefficients[-2::-1]:
        acc = a @ acc + c * np.eye(n)
    return acc


def apply_to_matrix(p: AlternatingPolynomial, a: np.ndarray) -> np.ndarray:
    """Evaluate the stored polynomial at a square matrix via Newton-Horner."""
    pts = p.mesh.points
    c = p.newton_coefficients
    n = a.shape[0]
    eye = np.eye(n)
    acc = c[-1] * eye
    for r in range(len(c) - 2, -1, -1):
        acc = (a - pts[r] * eye) @ acc + c[r] * eye
    return acc
