"""Simple undirected graphs, standard families and graph operations.

A :class:`Graph` stores its adjacency relation as one integer bitset per
vertex; bit ``j`` of ``rows[i]`` is set iff ``i ~ j``. Graphs are immutable
and hashable. Vertices are labelled ``0..n-1``.

Edge masks number the upper-triangle pairs column by column, ``(0,1), (0,2),
(1,2), (0,3), ...``, so pair ``(i, j)`` with ``i < j`` is bit
``j*(j-1)//2 + i``. This is the same order graph6 uses for its payload.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import SROError


def pair_index(i: int, j: int) -> int:
    """Bit position of the unordered pair ``{i, j}`` in an edge mask."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_list(n: int) -> list[tuple[int, int]]:
    """All pairs ``(i, j)``, ``i < j < n``, in edge-mask bit order."""
    return [(i, j) for j in range(n) for i in range(j)]


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise SROError(f"row count {len(self.rows)} does not match n={self.n}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full or (row >> i) & 1:
                raise SROError(f"row {i} has bits outside 0..n-1 or a self-loop")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not (self.rows[j] >> i) & 1:
                    raise SROError(f"adjacency is not symmetric at ({i}, {j})")
                r ^= low

    # -- constructors -----------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise SROError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise SROError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        rows = [0] * n
        bit = 0
        for j in range(n):
            for i in range(j):
                if (mask >> bit) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                bit += 1
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> Graph:
        a = np.asarray(matrix)
        n = a.shape[0]
        if a.shape != (n, n):
            raise SROError("adjacency matrix must be square")
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]))

    # -- queries ------------------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def neighbors(self, i: int) -> list[int]:
        row = self.rows[i]
        return [j for j in range(self.n) if (row >> j) & 1]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if (self.rows[i] >> j) & 1]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def mask(self) -> int:
        m = 0
        for i, j in self.edges():
            m |= 1 << pair_index(i, j)
        return m

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def subgraph_without_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise SROError(f"({u}, {v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- families ---------------------------------------------------------------


def _require_positive(**kwargs):
    for name, value in kwargs.items():
        if value < 1:
            raise SROError(f"{name} must be >= 1, got {value}")


def complete(n: int) -> Graph:
    _require_positive(n=n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def complete_bipartite(s: int, t: int) -> Graph:
    """``K_{s,t}`` with parts ``0..s-1`` and ``s..s+t-1``."""
    _require_positive(s=s, t=t)
    left = (1 << s) - 1
    right = ((1 << t) - 1) << s
    return Graph(s + t, (right,) * s + (left,) * t)


def path(n: int) -> Graph:
    _require_positive(n=n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def edgeless(n: int) -> Graph:
    return Graph.empty(n)


# -- operations -------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.rows)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.rows + tuple(row << shift for row in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    to_second = ((1 << n2) - 1) << n1
    to_first = (1 << n1) - 1
    return Graph(
        n1 + n2,
        tuple(row | to_second for row in g1.rows) + tuple((row << n1) | to_first for row in g2.rows),
    )


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Pairs ``(i, j) -> i*n2 + j``; adjacent when one coordinate is equal
    and the other adjacent."""
    n2 = g2.n
    edges = []
    for i in range(g1.n):
        for j, k in g2.edges():
            edges.append((i * n2 + j, i * n2 + k))
    for i, k in g1.edges():
        for j in range(n2):
            edges.append((i * n2 + j, k * n2 + j))
    return Graph.from_edges(g1.n * n2, edges)


def kronecker_product(g1: Graph, g2: Graph) -> Graph:
    """Pairs ``(i, j) -> i*n2 + j``; adjacent when both coordinates are."""
    n2 = g2.n
    edges = []
    for i, k in g1.edges():
        for j, l in g2.edges():
            edges.append((i * n2 + j, k * n2 + l))
            edges.append((i * n2 + l, k * n2 + j))
    return Graph.from_edges(g1.n * n2, edges)


def line_graph(g: Graph) -> Graph:
    """Vertex ``t`` of the result is the ``t``-th edge of ``g`` in sorted order."""
    edges = g.edges()
    incident: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for t, (u, v) in enumerate(edges):
        incident[u].append(t)
        incident[v].append(t)
    out = set()
    for ts in incident.values():
        for a in range(len(ts)):
            for b in range(a + 1, len(ts)):
                out.add((ts[a], ts[b]))
    return Graph.from_edges(len(edges), out)


def components(g: Graph) -> Iterator[list[int]]:
    seen = 0
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= g.rows[low.bit_length() - 1]
                f ^= low
            frontier = reach & ~comp
            comp |= reach
        seen |= comp
        yield [v for v in range(g.n) if (comp >> v) & 1]
