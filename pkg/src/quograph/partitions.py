"""Walk vectors and the walk-regular partition of V x V.

Pairs (u,v) are grouped by their exact vector of walk counts
(a_uv^(0), ..., a_uv^(d)); the classes J_0..J_r and their 0/1 matrices drive
every later decision. Big-integer vectors are compared exactly, never hashed
down to machine words.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolationError
from .exact import RowBasis, mat_mul, identity
from .graphs import DistanceData, Graph, require_connected


def adjacency_power_ladder(g: Graph) -> list[list[list[int]]]:
    """[I, A, ..., A^d] where d+1 is the adjacency algebra dimension.

    Powers are appended while their vectorizations stay linearly independent
    over Q; the first dependent power ends the ladder (all higher powers are
    then dependent too).
    """
    a = g.adjacency_matrix()
    basis = RowBasis()
    powers = []
    cur = identity(g.n)
    while True:
        vec = [x for row in cur for x in row]
        if not basis.add(vec):
            return powers
        powers.append(cur)
        cur = mat_mul(cur, a)


def walk_vectors(g: Graph, ladder=None) -> dict[tuple[int, int], tuple[int, ...]]:
    """Map (u,v) -> (a_uv^(0), ..., a_uv^(d)), exact."""
    require_connected(g)
    ladder = ladder if ladder is not None else adjacency_power_ladder(g)
    out = {}
    for u in range(g.n):
        for v in range(g.n):
            out[(u, v)] = tuple(p[u][v] for p in ladder)
    return out


def _first_nonzero(vec) -> int:
    for i, x in enumerate(vec):
        if x:
            return i
    raise ContractViolationError("all-zero walk vector on a connected graph")


@dataclass(frozen=True)
class PairPartition:
    """The partition {J_0,...,J_r} of V x V by walk-vector equality.

    Class 0 holds the diagonal pairs; remaining classes are ordered by
    (common distance, then descending walk vector) so output is reproducible.
    """

    n: int
    classes: tuple[tuple[tuple[int, int], ...], ...]
    class_walk_vectors: tuple[tuple[int, ...], ...]
    class_index: tuple[tuple[int, ...], ...]  # (u,v) -> class id
    diagonal_classes: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.classes) - 1

    @property
    def diagonal_is_identity(self) -> bool:
        return len(self.diagonal_classes) == 1 and len(self.classes[0]) == self.n

    def class_distance(self, i: int) -> int:
        return _first_nonzero(self.class_walk_vectors[i]) if i not in self.diagonal_classes else 0

    def class_matrix(self, i: int) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for u, v in self.classes[i]:
            m[u][v] = 1
        return m

    def as_setpartition(self) -> frozenset[frozenset[tuple[int, int]]]:
        return frozenset(frozenset(c) for c in self.classes)


def global_partition(g: Graph, ladder=None) -> PairPartition:
    """Group all ordered pairs by exact walk-vector equality."""
    require_connected(g)
    ladder = ladder if ladder is not None else adjacency_power_ladder(g)
    groups: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for u in range(g.n):
        for v in range(g.n):
            vec = tuple(p[u][v] for p in ladder)
            groups.setdefault(vec, []).append((u, v))
    diag = sorted(v for v in groups if v[0] == 1)           # a^(0)=1 iff u=v
    rest = sorted((v for v in groups if v[0] == 0),
                  key=lambda v: (_first_nonzero(v), tuple(-x for x in v)))
    order = diag + rest
    classes = tuple(tuple(groups[v]) for v in order)
    index = [[0] * g.n for _ in range(g.n)]
    for i, v in enumerate(order):
        for u, w in groups[v]:
            index[u][w] = i
    return PairPartition(
        n=g.n,
        classes=classes,
        class_walk_vectors=tuple(order),
        class_index=tuple(tuple(row) for row in index),
        diagonal_classes=tuple(range(len(diag))),
    )


@dataclass(frozen=True)
class LocalPartition:
    """Cells {v : (u,v) in J_i} around a center; empty cells dropped."""

    center: int
    cells: tuple[tuple[int, ...], ...]
    class_ids: tuple[int, ...]  # global class behind each cell

    @property
    def r(self) -> int:
        return len(self.cells) - 1

    def characteristic_vector(self, i: int, n: int) -> list[int]:
        chi = [0] * n
        for v in self.cells[i]:
            chi[v] = 1
        return chi


def local_partition(pp: PairPartition, u: int) -> LocalPartition:
    cells, ids = [], []
    for i, cls in enumerate(pp.classes):
        cell = tuple(v for (x, v) in cls if x == u)
        if cell:
            cells.append(cell)
            ids.append(i)
    return LocalPartition(center=u, cells=tuple(cells), class_ids=tuple(ids))


def is_distance_faithful(lp: LocalPartition, dd: DistanceData) -> bool:
    """True iff every cell is distance-homogeneous from the center."""
    du = dd.dist[lp.center]
    return all(len({du[v] for v in cell}) == 1 for cell in lp.cells)


def check_regular(g: Graph, lp: LocalPartition):
    """Quotient matrix B with b_ij = |Gamma(u) & cell_j|, u in cell_i.

    Verified by explicit per-vertex counting; returns None when the counts
    depend on the choice of u (partition not equitable).
    """
    cell_of = {}
    for j, cell in enumerate(lp.cells):
        for v in cell:
            cell_of[v] = j
    m = len(lp.cells)
    b = []
    for cell in lp.cells:
        ref = None
        for u in cell:
            counts = [0] * m
            for w in g.neighbors[u]:
                counts[cell_of[w]] += 1
            if ref is None:
                ref = counts
            elif counts != ref:
                return None
        b.append(ref)
    return b
