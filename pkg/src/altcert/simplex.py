"""Dense two-phase tableau simplex with Bland's rule.

Problems are stated as: optimize c'x subject to equality constraints
A_eq x = b_eq and per-variable box bounds (infinite bounds allowed).  The
solver converts to standard form (shift, flip, or split each variable;
finite upper bounds become slack rows), runs phase 1 with artificial
variables when equality rows exist, and always pivots by Bland's rule so
the result is deterministic and cycling-free.  Problem sizes here are tiny
(tens of variables), so the dense tableau is the simple, robust choice.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from altcert.errors import NumericError

STATUS_OPTIMAL = "optimal"
STATUS_INFEASIBLE = "infeasible"
STATUS_UNBOUNDED = "unbounded"

_PIVOT_TOL = 1e-9
_MAX_ITER_BASE = 200


@dataclass
class LPProblem:
    """maximize (or minimize) c'x  s.t.  a_eq x = b_eq,  lower <= x <= upper."""

    c: np.ndarray
    a_eq: np.ndarray
    b_eq: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    maximize: bool = True

    @classmethod
    def box(cls, c, lower, upper, a_eq=None, b_eq=None, maximize=True) -> "LPProblem":
        c = np.asarray(c, dtype=float)
        nv = c.shape[0]
        if a_eq is None:
            a_eq = np.zeros((0, nv))
            b_eq = np.zeros(0)
        return cls(
            c=c,
            a_eq=np.asarray(a_eq, dtype=float).reshape(-1, nv),
            b_eq=np.asarray(b_eq, dtype=float).reshape(-1),
            lower=np.asarray(lower, dtype=float),
            upper=np.asarray(upper, dtype=float),
            maximize=maximize,
        )


@dataclass
class LPSolution:
    status: str
    value: float | None
    x: np.ndarray | None
    iterations: int


@dataclass
class _StandardForm:
    a: np.ndarray            # (rows, cols) standard-form matrix
    b: np.ndarray
    cost: np.ndarray         # minimization costs per column
    n_eq: int                # leading rows that need artificials
    # per original variable: ("shift", col, l) | ("flip", col, u) | ("split", col_pos, col_neg)
    var_map: list = field(default_factory=list)


def _to_standard_form(lp: LPProblem) -> _StandardForm | str:
    """Rewrite the box LP as min cost'z, A z = b, z >= 0.

    Returns an infeasibility status string when a box is empty.
    """
    nv = lp.c.shape[0]
    a_eq = lp.a_eq
    b = lp.b_eq.astype(float).copy()
    cmin = (-lp.c if lp.maximize else lp.c).astype(float)

    cols: list[np.ndarray] = []
    cost: list[float] = []
    var_map: list = []
    bound_rows: list[tuple[int, float]] = []   # (column, range) for z <= range

    for j in range(nv):
        lo, up = lp.lower[j], lp.upper[j]
        aj = a_eq[:, j]
        if lo > up:
            return STATUS_INFEASIBLE
        if np.isfinite(lo):
            col = len(cols)
            cols.append(aj.copy())
            cost.append(cmin[j])
            b -= aj * lo
            var_map.append(("shift", col, lo))
            if np.isfinite(up):
                bound_rows.append((col, up - lo))
        elif np.isfinite(up):
            col = len(cols)
            cols.append(-aj)
            cost.append(-cmin[j])
            b -= aj * up
            var_map.append(("flip", col, up))
        else:
            cp = len(cols)
            cols.append(aj.copy())
            cost.append(cmin[j])
            cn = len(cols)
            cols.append(-aj)
            cost.append(-cmin[j])
            var_map.append(("split", cp, cn))

    n_eq = a_eq.shape[0]
    n_bound = len(bound_rows)
    n_z = len(cols)
    rows = n_eq + n_bound
    a = np.zeros((rows, n_z + n_bound))
    if n_z:
        a[:n_eq, :n_z] = np.column_stack(cols) if cols else np.zeros((n_eq, 0))
    rhs = np.zeros(rows)
    rhs[:n_eq] = b
    for r, (col, rng) in enumerate(bound_rows):
        a[n_eq + r, col] = 1.0
        a[n_eq + r, n_z + r] = 1.0
        rhs[n_eq + r] = rng
    cost_arr = np.array(cost + [0.0] * n_bound)
    return _StandardForm(a=a, b=rhs, cost=cost_arr, n_eq=n_eq, var_map=var_map)


def _iterate(tab: np.ndarray, rcost: np.ndarray, basis: list[int],
             limit: int) -> tuple[str, int]:
    """Primal simplex iterations on a canonical tableau, Bland's rule.

    ``tab`` is (rows, cols + 1) with the rhs in the last column; ``rcost``
    is the reduced-cost row over the ``cols`` structural columns.
    """
    rows, width = tab.shape
    cols = width - 1
    iters = 0
    while True:
        enter = -1
        for j in range(cols):
            if rcost[j] < -_PIVOT_TOL:
                enter = j
                break
        if enter < 0:
            return STATUS_OPTIMAL, iters
        best = np.inf
        for i in range(rows):
            aij = tab[i, enter]
            if aij > _PIVOT_TOL:
                best = min(best, max(tab[i, -1], 0.0) / aij)
        if not np.isfinite(best):
            return STATUS_UNBOUNDED, iters
        leave = -1
        tie = best + 1e-12 * max(1.0, best)
        for i in range(rows):
            aij = tab[i, enter]
            if aij > _PIVOT_TOL and max(tab[i, -1], 0.0) / aij <= tie:
                if leave < 0 or basis[i] < basis[leave]:
                    leave = i
        _pivot(tab, rcost, leave, enter)
        basis[leave] = enter
        iters += 1
        if iters > limit:
            raise NumericError("simplex iteration guard exceeded")


def _pivot(tab: np.ndarray, rcost: np.ndarray, row: int, col: int) -> None:
    tab[row] /= tab[row, col]
    for i in range(tab.shape[0]):
        if i != row and tab[i, col] != 0.0:
            tab[i] -= tab[i, col] * tab[row]
    if rcost[col] != 0.0:
        rcost -= rcost[col] * tab[row, :-1]


def _reduced_costs(cost: np.ndarray, tab: np.ndarray, basis: list[int]) -> np.ndarray:
    r = cost.astype(float).copy()
    for i, bi in enumerate(basis):
        if r[bi] != 0.0:
            r -= r[bi] * tab[i, :-1]
    return r


def simplex_solve(lp: LPProblem) -> LPSolution:
    """Solve a box-bounded LP; see the module docstring for the method."""
    std = _to_standard_form(lp)
    if isinstance(std, str):
        return LPSolution(status=std, value=None, x=None, iterations=0)

    rows, n_struct = std.a.shape
    limit = _MAX_ITER_BASE + 20 * (rows + n_struct)
    total_iters = 0

    # sign-normalize equality rows so artificial starts are feasible
    a = std.a.copy()
    b = std.b.copy()
    for i in range(std.n_eq):
        if b[i] < 0:
            a[i] *= -1.0
            b[i] = -b[i]

    if std.n_eq > 0:
        n_art = std.n_eq
        tab = np.zeros((rows, n_struct + n_art + 1))
        tab[:, :n_struct] = a
        tab[:, -1] = b
        basis: list[int] = []
        for i in range(rows):
            if i < std.n_eq:
                tab[i, n_struct + i] = 1.0
                basis.append(n_struct + i)
            else:
                basis.append(_slack_column(std, i))
        cost1 = np.zeros(n_struct + n_art)
        cost1[n_struct:] = 1.0
        rcost = _reduced_costs(cost1, tab, basis)
        status, it = _iterate(tab, rcost, basis, limit)
        total_iters += it
        if status != STATUS_OPTIMAL:
            raise NumericError(f"phase-1 simplex ended with status {status}")
        infeas = sum(tab[i, -1] for i in range(rows) if basis[i] >= n_struct)
        if infeas > 1e-7 * max(1.0, float(np.abs(b).max(initial=0.0))):
            return LPSolution(STATUS_INFEASIBLE, None, None, total_iters)
        tab, basis = _drive_out_artificials(tab, basis, n_struct)
        tab = np.hstack([tab[:, :n_struct], tab[:, -1:]])
    else:
        tab = np.zeros((rows, n_struct + 1))
        tab[:, :n_struct] = a
        tab[:, -1] = b
        basis = [_slack_column(std, i) for i in range(rows)]

    rcost = _reduced_costs(std.cost, tab, basis)
    status, it = _iterate(tab, rcost, basis, limit)
    total_iters += it
    if status == STATUS_UNBOUNDED:
        return LPSolution(STATUS_UNBOUNDED, None, None, total_iters)

    z = np.zeros(n_struct)
    for i, bi in enumerate(basis):
        if bi < n_struct:
            z[bi] = tab[i, -1]
    x = np.empty(lp.c.shape[0])
    for j, spec in enumerate(std.var_map):
        if spec[0] == "shift":
            x[j] = spec[2] + z[spec[1]]
        elif spec[0] == "flip":
            x[j] = spec[2] - z[spec[1]]
        else:
            x[j] = z[spec[1]] - z[spec[2]]
    value = float(np.dot(lp.c, x))
    return LPSolution(STATUS_OPTIMAL, value, x, total_iters)


def _slack_column(std: _StandardForm, row: int) -> int:
    """Column index of the slack owned by a bound row."""
    n_z = std.a.shape[1] - (std.a.shape[0] - std.n_eq)
    return n_z + (row - std.n_eq)


def _drive_out_artificials(tab: np.ndarray, basis: list[int],
                           n_struct: int) -> tuple[np.ndarray, list[int]]:
    """Pivot basic artificials out (degenerate pivots); drop redundant rows."""
    keep = []
    for i in range(tab.shape[0]):
        if basis[i] < n_struct:
            keep.append(i)
            continue
        piv = -1
        for j in range(n_struct):
            if abs(tab[i, j]) > _PIVOT_TOL:
                piv = j
                break
        if piv < 0:
            continue  # redundant constraint row
        dummy = np.zeros(tab.shape[1] - 1)
        _pivot(tab, dummy, i, piv)
        basis[i] = piv
        keep.append(i)
    if len(keep) != tab.shape[0]:
        tab = tab[keep]
        basis = [basis[i] for i in keep]
    return tab, basis
