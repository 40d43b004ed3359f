"""Floating-point spectra of graphs via cyclic Jacobi rotations.

The solver works on a stack of symmetric matrices at once, applying the same
pivot ``(p, q)`` to every matrix in the stack with per-matrix angles. That
keeps exhaustive sweeps over thousands of small graphs vectorized.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, SROError
from .graph import Graph

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 60


def round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pivot pairs for one cyclic sweep, grouped into rounds of disjoint pairs.

    Circle-method tournament schedule over ``n`` (padded to even) players;
    every pair ``p < q < n`` appears exactly once per sweep.
    """
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            p, q = players[i], players[m - 1 - i]
            if p < n and q < n:
                ps.append(min(p, q))
                qs.append(max(p, q))
        if ps:
            rounds.append((np.array(ps), np.array(qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigh(matrices, tol: float = DEFAULT_TOL, vectors: bool = False):
    """Eigen-decompose a stack of real symmetric matrices.

    ``matrices`` has shape ``(B, n, n)`` or ``(n, n)``. Returns eigenvalues
    sorted descending (and, with ``vectors=True``, the matching eigenvectors
    as columns). Iteration stops per matrix once the off-diagonal Frobenius
    norm drops below ``tol * n``.
    """
    a = np.array(matrices, dtype=np.float64)
    single = a.ndim == 2
    if single:
        a = a[None]
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise SROError("expected square matrices")
    if tol <= 0:
        raise SROError("tolerance must be positive")
    batch, n, _ = a.shape
    v = np.broadcast_to(np.eye(n), a.shape).copy() if vectors else None
    rounds = round_robin(n)

    threshold = tol * max(n, 1)
    offdiag = ~np.eye(n, dtype=bool)
    active = np.arange(batch)
    for _ in range(MAX_SWEEPS):
        sub = a[active]
        off = np.sqrt(np.sum((sub * sub)[:, offdiag], axis=1))
        active = active[~(off < threshold)]
        if active.size == 0:
            break
        sub = a[active]
        vsub = v[active] if vectors else None
        for ps, qs in rounds:
            _rotate(sub, vsub, ps, qs)
        a[active] = sub
        if vectors:
            v[active] = vsub
    else:
        raise ConvergenceError(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")
    if vectors:
        # one polishing sweep: convergence is quadratic, so residuals drop to rounding level
        for ps, qs in rounds:
            _rotate(a, v, ps, qs)

    w = np.diagonal(a, axis1=1, axis2=2)
    order = np.argsort(-w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    if vectors:
        v = np.take_along_axis(v, order[:, None, :], axis=2)
    if single:
        return (w[0], v[0]) if vectors else w[0]
    return (w, v) if vectors else w


def _rotate(a: np.ndarray, v, ps: np.ndarray, qs: np.ndarray) -> None:
    """Annihilate ``a[:, p, q]`` for every disjoint pair ``(p, q)`` at once."""
    apq = a[:, ps, qs]
    nz = apq != 0
    if not nz.any():
        return
    app = a[:, ps, ps]
    aqq = a[:, qs, qs]
    safe = np.where(nz, apq, 1.0)
    with np.errstate(over="ignore"):
        theta = (aqq - app) / (2.0 * safe)
        t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
    t = np.where(theta == 0, 1.0, t)
    t = np.where(nz, t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    cc = c[:, None, :]
    ss = s[:, None, :]
    col_p = a[:, :, ps]
    col_q = a[:, :, qs]
    a[:, :, ps] = cc * col_p - ss * col_q
    a[:, :, qs] = ss * col_p + cc * col_q
    cc = c[:, :, None]
    ss = s[:, :, None]
    row_p = a[:, ps, :]
    row_q = a[:, qs, :]
    a[:, ps, :] = cc * row_p - ss * row_q
    a[:, qs, :] = ss * row_p + cc * row_q
    a[:, ps, qs] = 0.0
    a[:, qs, ps] = 0.0
    if v is not None:
        cc = c[:, None, :]
        ss = s[:, None, :]
        vp = v[:, :, ps]
        vq = v[:, :, qs]
        v[:, :, ps] = cc * vp - ss * vq
        v[:, :, qs] = ss * vp + cc * vq


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    tolerance: float

    @property
    def radius(self) -> float:
        return self.eigenvalues[0]


@dataclass(frozen=True)
class PerronData:
    radius: float
    vector: tuple[float, ...]


def spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    if g.n < 1:
        raise SROError("spectrum needs at least one vertex")
    w = jacobi_eigh(g.adjacency_matrix(np.float64), tol)
    return Spectrum(tuple(float(x) for x in w), tol)


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return spectrum(g, tol).eigenvalues[0]


def spectral_radii(graphs, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Spectral radii of many graphs, batched by vertex count."""
    graphs = list(graphs)
    out = np.empty(len(graphs))
    by_order: dict[int, list[int]] = {}
    for idx, g in enumerate(graphs):
        by_order.setdefault(g.n, []).append(idx)
    for n, idxs in by_order.items():
        stack = np.stack([graphs[i].adjacency_matrix(np.float64) for i in idxs])
        out[idxs] = jacobi_eigh(stack, tol)[:, 0]
    return out


def perron(g: Graph, tol: float = DEFAULT_TOL) -> PerronData:
    if g.n < 1:
        raise SROError("perron needs at least one vertex")
    if not is_connected(g):
        raise SROError("Perron vector is only unique for connected graphs")
    w, vecs = jacobi_eigh(g.adjacency_matrix(np.float64), tol, vectors=True)
    x = vecs[:, 0]
    if x[np.argmax(np.abs(x))] < 0:
        x = -x
    x = np.where((x < 0) & (x > -10 * tol), 0.0, x)
    x = x / np.linalg.norm(x)
    return PerronData(float(w[0]), tuple(float(t) for t in x))


def signless_laplacian_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    if g.n < 1:
        raise SROError("need at least one vertex")
    a = g.adjacency_matrix(np.float64)
    q = a + np.diag(a.sum(axis=1))
    return float(jacobi_eigh(q, tol)[0])


def is_connected(g: Graph) -> bool:
    if g.n < 1:
        raise SROError("connectivity needs at least one vertex")
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


@dataclass(frozen=True)
class BipartiteCheck:
    """Outcome of a 2-colouring attempt.

    Truthy iff the graph is bipartite. ``coloring`` is a valid 0/1 colouring
    when bipartite; otherwise ``odd_cycle`` lists an odd closed walk
    ``v0, v1, ..., v0`` (first vertex repeated at the end).
    """

    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite

    def parts(self) -> tuple[list[int], list[int]]:
        if self.coloring is None:
            raise SROError("graph is not bipartite")
        return (
            [v for v, c in enumerate(self.coloring) if c == 0],
            [v for v, c in enumerate(self.coloring) if c == 1],
        )


def is_bipartite(g: Graph) -> BipartiteCheck:
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteCheck(False, odd_cycle=_odd_cycle(parent, u, w))
    return BipartiteCheck(True, coloring=tuple(color))


def _odd_cycle(parent: list[int], u: int, w: int) -> tuple[int, ...]:
    # u and w are same-coloured neighbours; join their BFS tree paths.
    def chain(x):
        out = [x]
        while parent[x] >= 0:
            x = parent[x]
            out.append(x)
        return out

    pu, pw = chain(u), chain(w)
    on_w = set(pw)
    lca = next(x for x in pu if x in on_w)
    up = pu[: pu.index(lca) + 1]  # u -> lca
    down = pw[: pw.index(lca)]  # w -> child of lca
    return tuple(reversed(up)) + tuple(down) + (lca,)
