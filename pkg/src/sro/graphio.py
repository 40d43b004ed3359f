"""graph6 and edge-list serialization.

graph6 here covers ``n <= 62`` only: one length byte ``n + 63`` followed by the
upper-triangle bits in column order, packed big-endian into 6-bit groups,
each emitted as ``value + 63``.
"""

from __future__ import annotations

import sys
from pathlib import Path

from .errors import GraphFormatError
from .graph import Graph

MAX_GRAPH6_ORDER = 62


def encode_graph6(g: Graph) -> bytes:
    if g.n > MAX_GRAPH6_ORDER:
        raise GraphFormatError(f"graph6 encoding supports n <= {MAX_GRAPH6_ORDER}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        out.append(value + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    if not data:
        raise GraphFormatError("empty graph6 string")
    if any(not 63 <= c <= 126 for c in data):
        raise GraphFormatError("graph6 bytes must lie in 63..126")
    n = data[0] - 63
    if n > MAX_GRAPH6_ORDER:
        raise GraphFormatError(f"length byte {data[0]} encodes n > {MAX_GRAPH6_ORDER} (extended form unsupported)")
    npairs = n * (n - 1) // 2
    payload = data[1:]
    if len(payload) != (npairs + 5) // 6:
        raise GraphFormatError(f"payload length {len(payload)} does not match n={n}")
    bits = []
    for c in payload:
        value = c - 63
        bits.extend((value >> s) & 1 for s in range(5, -1, -1))
    if any(bits[npairs:]):
        raise GraphFormatError("graph6 payload has nonzero padding bits")
    edges = []
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def format_edges(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edges(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(tok) for tok in lines[0].split()]
        if len(header) != 2:
            raise ValueError
        n, m = header
        pairs = []
        for ln in lines[1:]:
            toks = ln.split()
            if len(toks) != 2:
                raise ValueError
            pairs.append((int(toks[0]), int(toks[1])))
    except ValueError:
        raise GraphFormatError("edge list lines must hold two integers") from None
    if n < 0 or len(pairs) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(pairs)}")
    for u, v in pairs:
        if not 0 <= u < v < n:
            raise GraphFormatError(f"edge ({u}, {v}) violates 0 <= u < v < n")
    if len(set(pairs)) != len(pairs):
        raise GraphFormatError("duplicate edge")
    return Graph.from_edges(n, pairs)


def read_graph(source: str, stdin_text: str | None = None) -> Graph:
    """Load a graph from a path; ``-`` means edge-list text on stdin."""
    if source == "-":
        if stdin_text is None:
            stdin_text = sys.stdin.read()
        return parse_edges(stdin_text)
    path = Path(source)
    if path.suffix == ".g6":
        return decode_graph6(path.read_bytes().strip())
    return parse_edges(path.read_text(encoding="utf-8"))
