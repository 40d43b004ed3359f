"""Graph constructions with prescribed spectral radius.

The centrepiece is :func:`realize_quadratic`, which turns a 2x2 nonnegative
integer matrix with characteristic polynomial ``x^2 + bx + c`` into a graph
with an equitable two-block partition whose quotient is that matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebraic import check_condition_quadratic
from .errors import ConditionError, NotEquitableError, SROError
from .graph import (
    Graph,
    cartesian_product,
    complement,
    complete,
    complete_bipartite,
    disjoint_union,
    join,
    kronecker_product,
    line_graph,
)


def regular_graph(n: int, k: int) -> Graph:
    """A ``k``-regular circulant on ``n`` vertices.

    Offsets ``+-1 .. +-floor(k/2)``, plus ``n/2`` when ``k`` is odd.
    """
    if n < 1:
        raise SROError(f"n must be >= 1, got {n}")
    if k < 0:
        raise SROError(f"k must be >= 0, got {k}")
    if n < k + 1:
        raise SROError(f"no {k}-regular graph on {n} vertices: need n >= k + 1")
    if (n * k) % 2:
        raise SROError(f"no {k}-regular graph on {n} vertices: need n*k even")
    edges = set()
    for i in range(n):
        for d in range(1, k // 2 + 1):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
        if k % 2:
            j = (i + n // 2) % n
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class QuotientMatrix2:
    a11: int
    a12: int
    a21: int
    a22: int

    def as_rows(self) -> list[list[int]]:
        return [[self.a11, self.a12], [self.a21, self.a22]]

    def char_poly(self) -> tuple[int, int]:
        """``(b, c)`` with characteristic polynomial ``x^2 + bx + c``."""
        return -(self.a11 + self.a22), self.a11 * self.a22 - self.a12 * self.a21

    @property
    def spectral_radius(self) -> float:
        b, c = self.char_poly()
        return (-b + (b * b - 4 * c) ** 0.5) / 2


@dataclass(frozen=True)
class Realization:
    """Output of :func:`quadratic_realization`.

    ``blocks`` is the two-block equitable partition (empty tuple in the
    complete-graph case, where no quotient is needed).
    """

    graph: Graph
    quotient: QuotientMatrix2 | None
    blocks: tuple[tuple[int, ...], ...]
    M: int | None


def quotient_matrix(b: int, c: int) -> QuotientMatrix2:
    m = -(b // 2)
    if b == -2 * m:
        return QuotientMatrix2(m, 1, m * m - c, m)
    return QuotientMatrix2(m, 1, m * m - m - c, m - 1)


def realize_quadratic(b: int, c: int, M: int | None = None) -> Graph:
    """A graph whose spectral radius is the largest root of ``x^2 + bx + c``."""
    return quadratic_realization(b, c, M).graph


def quadratic_realization(b: int, c: int, M: int | None = None) -> Realization:
    """Like :func:`realize_quadratic`, also returning the partition and quotient.

    ``M`` defaults to the smallest even integer above ``m = -floor(b/2)``.
    """
    report = check_condition_quadratic(b, c)
    if not report.satisfied:
        raise ConditionError(f"x^2 + {b}x + {c}: {report.reason()}", report)
    m = -(b // 2)
    if c == (b * b) // 4:
        return Realization(complete(m + 1), None, (), None)

    A = quotient_matrix(b, c)
    if M is None:
        M = m + 1 if (m + 1) % 2 == 0 else m + 2
    elif M % 2 or M <= m:
        raise SROError(f"M must be an even integer larger than m={m}, got {M}")
    n1, n2 = M * A.a21, M * A.a12
    g1 = regular_graph(n1, A.a11)
    g2 = regular_graph(n2, A.a22)
    g = disjoint_union(g1, g2)
    # M complete bipartite blocks: t-th run of a21 part-1 vertices to t-th run of a12 part-2 vertices
    cross = []
    for t in range(M):
        for u in range(t * A.a21, (t + 1) * A.a21):
            for v in range(t * A.a12, (t + 1) * A.a12):
                cross.append((u, n1 + v))
    g = Graph.from_edges(n1 + n2, g.edges() + cross)
    blocks = (tuple(range(n1)), tuple(range(n1, n1 + n2)))
    return Realization(g, A, blocks, M)


@dataclass(frozen=True)
class EquitablePartition:
    blocks: tuple[tuple[int, ...], ...]
    quotient: tuple[tuple[Fraction, ...], ...]

    def quotient_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.quotient])


def verify_equitable(g: Graph, blocks) -> EquitablePartition:
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    seen = sorted(v for b in blocks for v in b)
    if seen != list(range(g.n)) or any(not b for b in blocks):
        raise SROError("blocks must be nonempty and partition the vertex set")
    masks = [sum(1 << v for v in b) for b in blocks]
    rows = []
    for i, bi in enumerate(blocks):
        row = []
        for j, mj in enumerate(masks):
            counts = [(g.rows[v] & mj).bit_count() for v in bi]
            for v, cnt in zip(bi, counts):
                if cnt != counts[0]:
                    raise NotEquitableError(
                        f"vertex {v} has {cnt} neighbours in block {j}, vertex {bi[0]} has {counts[0]}",
                        vertex=v,
                        block=j,
                    )
            row.append(Fraction(sum(counts), len(bi)))
        rows.append(tuple(row))
    return EquitablePartition(blocks, tuple(rows))


def family_bipartite_witness(n: int, m: int) -> Graph:
    if n < 1 or m < 1:
        raise SROError("need n, m >= 1")
    return complete_bipartite(n, n + m)


def family_join_witness(n: int, m: int) -> Graph:
    """``K_{n-m}`` joined with ``m`` independent vertices."""
    if not n > m >= 2:
        raise SROError(f"need n > m >= 2, got n={n}, m={m}")
    return join(complete(n - m), complement(complete(m)))


def join_witness_radius(n: int, m: int) -> float:
    s = n - m - 1
    return (s + (s * s + 4 * m * (n - m)) ** 0.5) / 2


def join_witness_ratio(n: int, m: int) -> float:
    """Perron-vector value on the independent part relative to the clique part."""
    s = n - m - 1
    return (-s + (s * s + 4 * m * (n - m)) ** 0.5) / (2 * m)


def realize_sum(g1: Graph, g2: Graph) -> Graph:
    return cartesian_product(g1, g2)


def realize_product(g1: Graph, g2: Graph) -> Graph:
    return kronecker_product(g1, g2)


def realize_signless_laplacian_radius(g: Graph) -> Graph:
    """Graph whose spectral radius is the signless-Laplacian radius of ``g``:
    ``L(g)`` times ``K_3`` (Cartesian). Edgeless input gives ``K_1`` (radius 0)."""
    if g.n < 1:
        raise SROError("need at least one vertex")
    if g.edge_count == 0:
        return complete(1)
    return cartesian_product(line_graph(g), complete(3))
