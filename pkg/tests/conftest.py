from __future__ import annotations

from math import comb

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from sro.graph import Graph


def all_graphs(n: int):
    """Every labelled graph on n vertices, by edge mask."""
    return [Graph.from_mask(n, mask) for mask in range(1 << comb(n, 2))]


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def atlas(max_n: int, connected: bool = False, min_n: int = 1) -> list[Graph]:
    """Unlabelled graphs on min_n..max_n vertices (networkx atlas, max_n <= 7)."""
    out = []
    for h in nx.graph_atlas_g():
        if not min_n <= h.number_of_nodes() <= max_n:
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append(from_nx(h))
    return out


def numpy_radius(g: Graph) -> float:
    """Oracle: LAPACK largest eigenvalue."""
    return float(np.linalg.eigvalsh(g.adjacency_matrix(np.float64))[-1])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << comb(n, 2)) - 1))
    return Graph.from_mask(n, mask)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    # random spanning tree, then extra edges
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    edges = {(p, v) for v, p in zip(range(1, n), parents)}
    extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges |= {(min(u, v), max(u, v)) for u, v in extra if u != v}
    return Graph.from_edges(n, edges)


# -- acceptance reporting ---------------------------------------------------------

ACCEPTANCE: dict[int, tuple[bool, float, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, seconds, detail = ACCEPTANCE[number]
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} ({seconds:.2f} s)"
        terminalreporter.write_line(line + (f" {detail}" if detail else ""))
