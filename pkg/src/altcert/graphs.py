"""Graph representation, parsing, generation, and exact distances.

Graphs are finite, undirected, simple and connected, with dense 0-based
vertex indices.  Everything here is immutable after construction and all
randomness flows through explicit seeds.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from altcert import _kernels
from altcert.errors import GraphParseError, GraphValidationError

FAMILIES = ("cycle", "path", "complete", "star", "petersen", "random_connected")


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected undirected graph.

    ``edges`` holds each edge once as a sorted pair, lexicographically
    ordered; ``adjacency`` holds sorted neighbor tuples per vertex.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr, indices) as int32 arrays."""
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        for v, nbrs in enumerate(self.adjacency):
            indptr[v + 1] = indptr[v] + len(nbrs)
        indices = np.fromiter(
            (u for nbrs in self.adjacency for u in nbrs),
            dtype=np.int32,
            count=2 * self.m,
        )
        return indptr, indices


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; ``values`` is a read-only (n, n) int array."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, key):
        return self.values[key]

    def eccentricity(self, v: int) -> int:
        return int(self.values[v].max())

    def diameter(self) -> int:
        return int(self.values.max())


@dataclass(frozen=True)
class VertexSet:
    """A nonempty vertex subset with its cached degree profile.

    ``rho`` is the squared sum of the square roots of the member degrees.
    Uniform-degree sets use the closed form ``len**2 * degree`` so that the
    regular-graph identity holds exactly.
    """

    vertices: tuple[int, ...]
    min_degree: int
    rho: float

    @classmethod
    def of(cls, g: Graph, vertices: Iterable[int]) -> "VertexSet":
        vs = sorted(set(int(v) for v in vertices))
        if not vs:
            raise GraphValidationError("vertex set must be nonempty")
        if vs[0] < 0 or vs[-1] >= g.n:
            raise GraphValidationError(
                f"vertex set contains indices outside [0, {g.n})"
            )
        degs = [g.degrees[v] for v in vs]
        if min(degs) == max(degs):
            rho = float(len(vs) * len(vs) * degs[0])
        else:
            rho = math.fsum(math.sqrt(d) for d in degs) ** 2
        return cls(tuple(vs), min(degs), rho)

    def __len__(self) -> int:
        return len(self.vertices)


def _canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Assemble and validate a Graph from pre-deduplicated edges."""
    if n < 2:
        raise GraphValidationError(f"graph needs at least 2 vertices, got {n}")
    edge_tuple = tuple(sorted(_canonical_edge(u, v) for u, v in edges))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_tuple:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in nbrs)
    degrees = tuple(len(a) for a in adjacency)
    g = Graph(n=n, edges=edge_tuple, adjacency=adjacency, degrees=degrees)
    _check_connected(g)
    return g


def _check_connected(g: Graph) -> None:
    indptr, indices = g.csr()
    out = np.empty(g.n, dtype=np.int32)
    _kernels.bfs_single(g.n, indptr, indices, 0, out)
    unreachable = np.flatnonzero(out < 0)
    if unreachable.size:
        raise GraphValidationError(
            f"graph is disconnected: vertex {int(unreachable[0])} is not "
            "reachable from vertex 0"
        )


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated 0-based edge pairs, one per line.

    ``#`` starts a comment that runs to end of line; blank lines are
    ignored.  Raises :class:`GraphParseError` naming the offending line for
    malformed tokens, self-loops and duplicate edges, and
    :class:`GraphValidationError` for structural problems.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_vertex = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(
                f"line {lineno}: expected two vertex indices, got {len(tokens)} tokens"
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(
                f"line {lineno}: malformed vertex token in {tokens!r}"
            ) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"line {lineno}: negative vertex index")
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        e = _canonical_edge(u, v)
        if e in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge {e[0]} {e[1]}")
        seen.add(e)
        edges.append(e)
        max_vertex = max(max_vertex, u, v)
    if not edges:
        raise GraphParseError("no edges found in input")
    return _build_graph(max_vertex + 1, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format: ``c`` comments, one ``p edge N M`` header,
    then M lines ``e u v`` with 1-based vertices (shifted to 0-based here)."""
    n = None
    m_declared = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise GraphParseError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphParseError(
                    f"line {lineno}: expected 'p edge N M' problem line"
                )
            try:
                n, m_declared = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise GraphParseError(
                    f"line {lineno}: malformed problem-line counts"
                ) from None
        elif tokens[0] == "e":
            if n is None:
                raise GraphParseError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise GraphParseError(f"line {lineno}: expected 'e u v'")
            try:
                u1, v1 = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphParseError(
                    f"line {lineno}: malformed vertex token in {tokens!r}"
                ) from None
            if not (1 <= u1 <= n) or not (1 <= v1 <= n):
                raise GraphParseError(
                    f"line {lineno}: vertex out of range 1..{n}"
                )
            if u1 == v1:
                raise GraphParseError(f"line {lineno}: self-loop at vertex {u1}")
            e = _canonical_edge(u1 - 1, v1 - 1)
            if e in seen:
                raise GraphParseError(
                    f"line {lineno}: duplicate edge {u1} {v1}"
                )
            seen.add(e)
            edges.append(e)
        else:
            raise GraphParseError(
                f"line {lineno}: unrecognized line type {tokens[0]!r}"
            )
    if n is None:
        raise GraphParseError("missing 'p edge N M' problem line")
    if len(edges) != m_declared:
        raise GraphParseError(
            f"header declares {m_declared} edges but {len(edges)} were given"
        )
    return _build_graph(n, edges)


def _prufer_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Decode a uniformly random Prufer sequence into tree edges."""
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    # smallest-leaf elimination
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append(_canonical_edge(leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append(_canonical_edge(u, v))
    return edges


def generate(family: str, n: int, seed: int = 0) -> Graph:
    """Build a named graph family member.

    ``random_connected`` draws a uniform random spanning tree (Prufer) and
    then adds each remaining vertex pair independently with probability
    0.3, so connectivity never needs rejection sampling; the same seed
    always yields the same graph.
    """
    if family not in FAMILIES:
        raise GraphValidationError(
            f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}"
        )
    if family == "cycle":
        if n < 3:
            raise GraphValidationError("cycle requires n >= 3")
        return _build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "path":
        if n < 2:
            raise GraphValidationError("path requires n >= 2")
        return _build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "complete":
        if n < 2:
            raise GraphValidationError("complete requires n >= 2")
        return _build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "star":
        if n < 2:
            raise GraphValidationError("star requires n >= 2")
        return _build_graph(n, [(0, i) for i in range(1, n)])
    if family == "petersen":
        if n != 10:
            raise GraphValidationError("petersen is fixed at n = 10")
        edges = []
        for i in range(5):
            edges.append((i, (i + 1) % 5))          # outer cycle
            edges.append((i, i + 5))                # spokes
            edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        return _build_graph(10, edges)
    # random_connected
    if n < 2:
        raise GraphValidationError("random_connected requires n >= 2")
    rng = random.Random(seed)
    edges = set(_prufer_tree(n, rng))
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in edges:
                continue
            if rng.random() < 0.3:
                edges.add((i, j))
    return _build_graph(n, edges)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """Exact BFS hop distances from every source."""
    indptr, indices = g.csr()
    values = _kernels.bfs_all_pairs(g.n, indptr, indices)
    values.setflags(write=False)
    return DistanceMatrix(values)


def set_distance(d: DistanceMatrix, s: VertexSet, t: VertexSet) -> int:
    """Minimum pairwise distance between two nonempty vertex sets."""
    if not s.vertices or not t.vertices:
        raise GraphValidationError("set_distance requires nonempty sets")
    sub = d.values[np.ix_(s.vertices, t.vertices)]
    return int(sub.min())


def is_unicyclic(g: Graph) -> bool:
    """True iff the (connected) graph contains exactly one cycle (m = n)."""
    return g.m == g.n
