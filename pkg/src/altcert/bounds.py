"""Spectral thresholds and certificates for conditional diameters.

A query (alpha, beta, s, t) asks for the maximum distance between two
vertex sets of sizes >= s and >= t whose members all have degree >= alpha
resp. >= beta.  If the degree-k alternating polynomial value P_k at the
evaluation point strictly exceeds

    sqrt((2m/(s*alpha) - 1) * (2m/(t*beta) - 1)),

then that conditional diameter is at most k.  The same threshold works for
the Laplacian-side polynomials evaluated at 0.  Refinements cover concrete
set profiles, regular and unicyclic special cases, and bounds on separated
set sizes and vertex separators.

Certification uses strict inequality.  Because both sides are floating
point, a value within relative 1e-9 of the threshold is treated as equal
and therefore NOT certifying: boundary cases (which exist; e.g. the
4-cycle with query (2,2,1,1) has P_1 = threshold = 3) must not flip to an
unsound claim on rounding noise.  An optional margin shifts the threshold
up for extra caution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from altcert.errors import QueryValidationError
from altcert.graphs import Graph, VertexSet
from altcert.spectral import (
    KIND_CHUNG_LAPLACIAN,
    KIND_DEGREE_ADJACENCY,
    mesh_of,
)
from altcert import altpoly

TIE_REL_TOL = 1e-9

SPECIAL_CASES = ("a", "b", "c", "d", "e")


@dataclass(frozen=True)
class BoundQuery:
    """Degree floors (alpha, beta) and size floors (s, t) for the two sets."""

    alpha: int
    beta: int
    s: int
    t: int


@dataclass(frozen=True)
class CertRow:
    k: int
    value: float
    certified: bool


@dataclass(frozen=True)
class BoundCertificate:
    """Per-degree certification table for one query and one matrix kind."""

    query: BoundQuery
    kind: str
    threshold: float
    rows: tuple[CertRow, ...]
    min_certified_k: int | None
    theorem: str
    vacuous: bool = False


def strictly_exceeds(value: float, threshold: float, margin: float = 0.0) -> bool:
    """Strict comparison with a tie-rejection band (see module docstring)."""
    if margin:
        threshold = threshold + margin
    band = TIE_REL_TOL * max(1.0, abs(value), abs(threshold))
    return value > threshold and value - threshold > band


def snapped_floor(x: float) -> int:
    """floor(x), except values within relative 1e-9 of an integer snap to it.

    Used for the separated-size bounds, where rounding noise just below an
    integer boundary would otherwise tighten a valid bound into a wrong one.
    """
    nearest = round(x)
    if abs(x - nearest) <= 1e-9 * max(1.0, abs(x)):
        return int(nearest)
    return int(math.floor(x))


def validate_query(g: Graph, q: BoundQuery) -> None:
    """Check a query against a concrete graph."""
    if not (1 <= q.s <= g.n and 1 <= q.t <= g.n):
        raise QueryValidationError(
            f"set sizes s={q.s}, t={q.t} must lie in 1..{g.n}"
        )
    lo, hi = g.min_degree, g.max_degree
    if not (lo <= q.alpha <= hi and lo <= q.beta <= hi):
        raise QueryValidationError(
            f"degree floors alpha={q.alpha}, beta={q.beta} must lie in "
            f"{lo}..{hi} for this graph"
        )


def query_vacuous(g: Graph, q: BoundQuery) -> bool:
    """True when fewer than s (resp. t) vertices meet the degree floor."""
    n_alpha = sum(1 for d in g.degrees if d >= q.alpha)
    n_beta = sum(1 for d in g.degrees if d >= q.beta)
    return n_alpha < q.s or n_beta < q.t


def diameter_threshold(m: int, q: BoundQuery) -> float:
    """sqrt((2m/(s alpha) - 1)(2m/(t beta) - 1)); the general threshold."""
    fa = 2.0 * m / (q.s * q.alpha) - 1.0
    fb = 2.0 * m / (q.t * q.beta) - 1.0
    if fa < 0 or fb < 0:
        raise QueryValidationError(
            "query exceeds handshake capacity: a set of s vertices of degree "
            ">= alpha forces 2m >= s*alpha"
        )
    return math.sqrt(fa * fb)


def set_pair_threshold(m: int, s_profile: VertexSet, t_profile: VertexSet) -> float:
    """Refined threshold from two concrete vertex-set degree profiles."""
    s, t = len(s_profile), len(t_profile)
    fa = 2.0 * m * s / s_profile.rho - 1.0
    fb = 2.0 * m * t / t_profile.rho - 1.0
    if fa < 0 or fb < 0:
        raise QueryValidationError(
            "set profile exceeds handshake capacity; inputs are inconsistent"
        )
    return math.sqrt(fa * fb)


def special_case_threshold(
    g: Graph,
    case: str,
    alpha: int | None = None,
    s: int | None = None,
    t: int | None = None,
) -> float:
    """Simplified thresholds for common query shapes.

    a: symmetric single-vertex query at degree floor alpha -> 2m/alpha - 1
    b: the standard diameter -> 2m/delta - 1
    c: regular graphs, standard diameter -> n - 1
    d: unicyclic graphs, standard diameter -> 2n - 1
    e: regular graphs, size-only (s, t) query -> sqrt((n/s - 1)(n/t - 1))
    """
    if case not in SPECIAL_CASES:
        raise QueryValidationError(f"unknown special case {case!r}")
    if case == "a":
        if alpha is None:
            raise QueryValidationError("case 'a' needs a degree floor alpha")
        return 2.0 * g.m / alpha - 1.0
    if case == "b":
        return 2.0 * g.m / g.min_degree - 1.0
    if case == "c":
        if g.min_degree != g.max_degree:
            raise QueryValidationError("case 'c' requires a regular graph")
        return float(g.n - 1)
    if case == "d":
        if g.m != g.n:
            raise QueryValidationError("case 'd' requires a unicyclic graph")
        return float(2 * g.n - 1)
    if g.min_degree != g.max_degree:
        raise QueryValidationError("case 'e' requires a regular graph")
    if s is None or t is None:
        raise QueryValidationError("case 'e' needs set sizes s and t")
    fa = g.n / s - 1.0
    fb = g.n / t - 1.0
    if fa < 0 or fb < 0:
        raise QueryValidationError("set sizes exceed the graph order")
    return math.sqrt(fa * fb)


def min_certified_k(
    values: list[float], threshold: float, margin: float = 0.0
) -> int | None:
    """Smallest k whose polynomial value strictly exceeds the threshold."""
    for k, v in enumerate(values):
        if strictly_exceeds(v, threshold, margin):
            return k
    return None


def max_separated_set_size(m: int, alpha: int, pk_value: float) -> int:
    """Largest common size s of two degree->=alpha sets at distance > k,
    given P_k: s <= floor(2m / (alpha (P_k + 1)))."""
    return snapped_floor(2.0 * m / (alpha * (pk_value + 1.0)))


def max_separated_degree(m: int, s: int, pk_value: float) -> int:
    """Largest degree floor alpha compatible with two separated size-s sets:
    alpha <= floor(2m / (s (P_k + 1)))."""
    return snapped_floor(2.0 * m / (s * (pk_value + 1.0)))


def regular_separated_size(n: int, pk_value: float) -> int:
    """Regular-graph specialization: s <= floor(n / (P_k + 1))."""
    return snapped_floor(n / (pk_value + 1.0))


def separator_lower_bound(n: int, m: int, alpha: int, pk_value: float) -> int:
    """Minimum size of a vertex set splitting the graph into two equal
    degree->=alpha halves at distance > k: at least n - 2 floor(...)."""
    return max(0, n - 2 * max_separated_set_size(m, alpha, pk_value))


def _build_certificate(
    query: BoundQuery,
    kind: str,
    threshold: float,
    values: list[float],
    theorem: str,
    margin: float,
    vacuous: bool,
) -> BoundCertificate:
    rows = tuple(
        CertRow(k=k, value=v, certified=strictly_exceeds(v, threshold, margin))
        for k, v in enumerate(values)
    )
    mck = None
    for row in rows:
        if row.certified:
            mck = row.k
            break
    return BoundCertificate(
        query=query,
        kind=kind,
        threshold=threshold,
        rows=rows,
        min_certified_k=mck,
        theorem=theorem,
        vacuous=vacuous,
    )


def certificate(
    g: Graph,
    query: BoundQuery,
    kind: str = KIND_DEGREE_ADJACENCY,
    margin: float = 0.0,
    polys: list[altpoly.AlternatingPolynomial] | None = None,
) -> BoundCertificate:
    """Certify a query against the chosen matrix kind.

    ``polys`` lets callers reuse a precomputed polynomial table for the
    same graph and kind.  Queries whose eligible vertex pools are smaller
    than s or t are flagged vacuous (no claim either way).
    """
    validate_query(g, query)
    if polys is None:
        polys = altpoly.polynomial_table(mesh_of(g, kind))
    values = [p.extremal_value for p in polys]
    threshold = diameter_threshold(g.m, query)
    theorem = "general" if kind == KIND_DEGREE_ADJACENCY else "laplacian"
    return _build_certificate(
        query, kind, threshold, values, theorem, margin, query_vacuous(g, query)
    )


def laplacian_certificate(
    g: Graph,
    query: BoundQuery,
    margin: float = 0.0,
    polys: list[altpoly.AlternatingPolynomial] | None = None,
) -> BoundCertificate:
    """Certificate from the Laplacian mesh with evaluation at 0; agrees with
    the degree-adjacency certificate on every graph."""
    return certificate(g, query, KIND_CHUNG_LAPLACIAN, margin, polys)


def special_case_certificate(
    g: Graph,
    case: str,
    alpha: int | None = None,
    s: int | None = None,
    t: int | None = None,
    margin: float = 0.0,
    polys: list[altpoly.AlternatingPolynomial] | None = None,
) -> BoundCertificate:
    """Certificate against one of the simplified thresholds a..e."""
    threshold = special_case_threshold(g, case, alpha=alpha, s=s, t=t)
    if polys is None:
        polys = altpoly.polynomial_table(mesh_of(g, KIND_DEGREE_ADJACENCY))
    values = [p.extremal_value for p in polys]
    query = _special_case_query(g, case, alpha=alpha, s=s, t=t)
    return _build_certificate(
        query,
        KIND_DEGREE_ADJACENCY,
        threshold,
        values,
        f"special-{case}",
        margin,
        query_vacuous(g, query),
    )


def _special_case_query(g, case, alpha=None, s=None, t=None) -> BoundQuery:
    if case == "a":
        return BoundQuery(alpha=alpha, beta=alpha, s=1, t=1)
    if case in ("b", "c"):
        return BoundQuery(alpha=g.min_degree, beta=g.min_degree, s=1, t=1)
    if case == "d":
        return BoundQuery(alpha=g.min_degree, beta=g.min_degree, s=1, t=1)
    return BoundQuery(alpha=g.min_degree, beta=g.min_degree, s=s, t=t)
