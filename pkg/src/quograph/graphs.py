"""Simple undirected graphs, named families, and exact metric structure."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import AnalysisError, GraphInputError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1, no loops, no multi-edges."""

    n: int
    neighbors: tuple[frozenset[int], ...]

    def degree(self, u: int) -> int:
        return len(self.neighbors[u])

    def degree_sequence(self) -> list[int]:
        return [self.degree(u) for u in range(self.n)]

    def is_regular(self) -> bool:
        degs = self.degree_sequence()
        return len(set(degs)) <= 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[1 if v in self.neighbors[u] else 0 for v in range(self.n)]
                for u in range(self.n)]


@dataclass(frozen=True)
class DistanceData:
    """All-pairs distances; None marks unreachable pairs (never a big integer)."""

    dist: tuple[tuple[int | None, ...], ...]
    ecc: tuple[int | None, ...]
    diameter: int | None
    connected: bool


def build_graph(n: int, edges) -> Graph:
    """Build a simple graph from an (iterable of) unordered vertex pairs.

    Duplicate edges collapse; loops and out-of-range endpoints are rejected.
    """
    if n < 1:
        raise GraphInputError(f"vertex count must be positive, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge {e!r} has endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"loop edge at vertex {u} is not allowed")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in nbrs))


def circulant(n: int, connection) -> Graph:
    """Circulant graph on Z_n: u ~ u +- s (mod n) for each residue s."""
    conn = sorted(set(connection))
    for s in conn:
        if not (1 <= s <= n // 2):
            raise GraphInputError(
                f"circulant residue {s} outside 1..{n // 2} for modulus {n}")
    edges = []
    for u in range(n):
        for s in conn:
            edges.append((u, (u + s) % n))
    return build_graph(n, edges)


def distances(g: Graph) -> DistanceData:
    """Exact BFS distances, eccentricities, and diameter."""
    dist_rows: list[tuple[int | None, ...]] = []
    ecc: list[int | None] = []
    connected = True
    for s in range(g.n):
        row: list[int | None] = [None] * g.n
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.neighbors[u]:
                if row[v] is None:
                    row[v] = row[u] + 1
                    q.append(v)
        finite = [d for d in row if d is not None]
        if len(finite) < g.n:
            connected = False
            ecc.append(None)
        else:
            ecc.append(max(finite))
        dist_rows.append(tuple(row))
    diameter = max((e for e in ecc if e is not None), default=None) if connected else None
    return DistanceData(tuple(dist_rows), tuple(ecc), diameter, connected)


def require_connected(g: Graph, dd: DistanceData | None = None) -> DistanceData:
    dd = dd if dd is not None else distances(g)
    if not dd.connected:
        raise AnalysisError("graph is disconnected; analysis is undefined")
    return dd


def distance_class_matrix(g: Graph, i: int, dd: DistanceData | None = None) -> list[list[int]]:
    """0/1 matrix of the pairs at distance exactly i."""
    dd = dd if dd is not None else distances(g)
    if dd.diameter is None:
        raise AnalysisError("distance class matrices need a connected graph")
    if not (0 <= i <= dd.diameter):
        raise GraphInputError(f"distance {i} outside 0..{dd.diameter}")
    return [[1 if dd.dist[u][v] == i else 0 for v in range(g.n)] for u in range(g.n)]


# --- named families -------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("cycle needs at least 3 vertices")
    return build_graph(n, [(u, (u + 1) % n) for u in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(u, u + 1) for u in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star K_{1,n-1} on n vertices, center 0."""
    return build_graph(n, [(0, v) for v in range(1, n)])


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer pentagon
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        edges.append((i, 5 + i))                # spokes
    return build_graph(10, edges)


def prism_y6() -> Graph:
    """The prism Y_6 = K_2 x C_6 in its chordal ring (12,4) labelling.

    Twelve-cycle 0..11 plus a chord from every odd vertex i to i+3 (mod 12).
    """
    edges = [(u, (u + 1) % 12) for u in range(12)]
    edges += [(u, (u + 3) % 12) for u in range(1, 12, 2)]
    return build_graph(12, edges)


NAMED_FAMILIES = {
    "petersen": petersen_graph,
    "y6": prism_y6,
    "prism-y6": prism_y6,
}

PARAMETRIC_FAMILIES = {
    "complete": complete_graph,
    "cycle": cycle_graph,
    "path": path_graph,
    "star": star_graph,
}
