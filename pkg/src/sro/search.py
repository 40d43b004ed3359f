"""Exhaustive search for the smallest graph with a given spectral radius.

Graphs of order ``n`` are enumerated as edge masks ``0 .. 2^(n(n-1)/2) - 1``
(bit order as in :mod:`sro.graph`). Each batch goes through cheap filters
(maximum degree, then a numeric Jacobi spectral radius) and only the few
numeric matches are certified exactly: the minimal polynomial must divide the
characteristic polynomial and no root of the characteristic polynomial may
lie above the target's rational bracket.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterator

import numpy as np

from .algebraic import QuadraticTarget, check_condition_quadratic
from .errors import ConditionError, SROError
from .graph import Graph, pair_list
from .poly import IntPolynomial, certify_largest_root, char_poly, divides
from .spectral import is_bipartite, jacobi_eigh, spectral_radius

HARD_MAX_ORDER = 10
DEFAULT_MAX_ORDER = 8
NUMERIC_PREFILTER = 1e-6
NUMERIC_MATCH = 1e-9
CHUNK = 1 << 15


def enumeration_cap() -> int:
    """Default cap 8, raised by ``SRO_MAX_ORDER`` up to the hard cap 10."""
    raw = os.environ.get("SRO_MAX_ORDER")
    if not raw:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise SROError(f"SRO_MAX_ORDER must be an integer, got {raw!r}") from None
    return min(HARD_MAX_ORDER, max(DEFAULT_MAX_ORDER, value))


def as_target(target) -> QuadraticTarget:
    if isinstance(target, QuadraticTarget):
        return target
    if isinstance(target, int) and not isinstance(target, bool):
        if target < 1:
            raise ConditionError(f"integer target must be positive, got {target}")
        return QuadraticTarget.from_integer(target)
    raise SROError(f"unsupported target {target!r}")


# -- certification ------------------------------------------------------------


@dataclass(frozen=True)
class RadiusVerdict:
    ok: bool
    reasons: tuple[str, ...]
    numeric_radius: float
    char_poly: IntPolynomial

    def __bool__(self) -> bool:
        return self.ok


def verify_radius(g: Graph, target) -> RadiusVerdict:
    """Exact check that the spectral radius of ``g`` equals ``target``."""
    t = as_target(target)
    reasons = []
    if g.n < 1:
        raise SROError("graph has no vertices")
    numeric = spectral_radius(g)
    p = char_poly(g)
    minpoly = t.minimal_polynomial()
    if not divides(minpoly, p):
        reasons.append(f"minimal polynomial {minpoly} does not divide characteristic polynomial")
    else:
        try:
            if not certify_largest_root(p, minpoly, t.bracket()):
                reasons.append("characteristic polynomial has a root above the target")
        except SROError as exc:
            reasons.append(str(exc))
    if abs(numeric - t.value) > NUMERIC_MATCH:
        reasons.append(f"numeric spectral radius {numeric!r} differs from {t.value!r}")
    return RadiusVerdict(not reasons, tuple(reasons), numeric, p)


# -- enumeration --------------------------------------------------------------


def count_graphs(n: int, bipartite_only: bool = False) -> int:
    """Number of labelled graphs on ``n`` vertices (optionally bipartite).

    Bipartite counts use the exponential generating function identity
    ``bipartite = sqrt(2-coloured)``.
    """
    if not bipartite_only:
        return 1 << comb(n, 2)
    coloured = [Fraction(sum(comb(k, j) * 2 ** (j * (k - j)) for j in range(k + 1)), factorial(k)) for k in range(n + 1)]
    root = [Fraction(1)]
    for k in range(1, n + 1):
        acc = coloured[k] - sum(root[i] * root[k - i] for i in range(1, k))
        root.append(acc / 2)
    value = root[n] * factorial(n)
    assert value.denominator == 1
    return int(value)


def _check_order(n: int) -> None:
    if not 1 <= n <= HARD_MAX_ORDER:
        raise SROError(f"enumeration order must lie in 1..{HARD_MAX_ORDER}, got {n}")


def enumerate_graphs(n: int, bipartite_only: bool = False) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, in ascending edge-mask order."""
    _check_order(n)
    for mask in range(1 << comb(n, 2)):
        g = Graph.from_mask(n, mask)
        if bipartite_only and not is_bipartite(g):
            continue
        yield g


def adjacency_batch(n: int, masks: np.ndarray) -> np.ndarray:
    """``(B, n, n)`` int8 adjacency matrices for an array of edge masks."""
    pairs = pair_list(n)
    a = np.zeros((len(masks), n, n), dtype=np.int8)
    if pairs:
        bits = ((masks[:, None] >> np.arange(len(pairs), dtype=np.int64)) & 1).astype(np.int8)
        rows = np.array([i for i, _ in pairs])
        cols = np.array([j for _, j in pairs])
        a[:, rows, cols] = bits
        a[:, cols, rows] = bits
    return a


def bipartite_mask(a: np.ndarray) -> np.ndarray:
    """Per-matrix bipartiteness: no closed walk of odd length ``<= n``.

    A shortest odd closed walk is an odd cycle, so checking lengths up to
    ``n`` suffices.
    """
    batch, n, _ = a.shape
    ok = np.ones(batch, dtype=bool)
    base = a.astype(np.int64)
    power = base.copy()
    for k in range(2, n + 1):
        power = power @ base
        if k % 2:
            ok &= np.trace(power, axis1=1, axis2=2) == 0
    return ok


@dataclass
class RangeResult:
    universe: int = 0
    degree_filtered: int = 0
    numeric_matches: int = 0
    found: int = 0
    first_mask: int | None = None

    def merge(self, other: RangeResult) -> None:
        self.universe += other.universe
        self.degree_filtered += other.degree_filtered
        self.numeric_matches += other.numeric_matches
        self.found += other.found
        if other.first_mask is not None and (self.first_mask is None or other.first_mask < self.first_mask):
            self.first_mask = other.first_mask


def scan_range(n: int, start: int, stop: int, b: int, c: int, bipartite_only: bool) -> RangeResult:
    """Scan masks ``start .. stop-1`` of order ``n`` for the target ``x^2+bx+c``."""
    target = QuadraticTarget(b, c)
    min_degree = target.ceil()
    out = RangeResult()
    for lo in range(start, stop, CHUNK):
        masks = np.arange(lo, min(lo + CHUNK, stop), dtype=np.int64)
        a = adjacency_batch(n, masks)
        if bipartite_only:
            keep = bipartite_mask(a)
            masks, a = masks[keep], a[keep]
        out.universe += len(masks)
        keep = a.sum(axis=2).max(axis=1) >= min_degree
        out.degree_filtered += int((~keep).sum())
        masks, a = masks[keep], a[keep]
        if not len(masks):
            continue
        radii = jacobi_eigh(a.astype(np.float64))[:, 0]
        close = np.abs(radii - target.value) <= NUMERIC_PREFILTER
        out.numeric_matches += int(close.sum())
        for mask in masks[close]:
            if verify_radius(Graph.from_mask(n, int(mask)), target):
                out.found += 1
                if out.first_mask is None:
                    out.first_mask = int(mask)
    return out


# -- kappa --------------------------------------------------------------------


@dataclass(frozen=True)
class OrderStats:
    order: int
    examined: int
    pruned: int
    found: int
    bipartite_only: bool = False
    skipped: bool = False
    degree_filtered: int = 0
    numeric_matches: int = 0

    def line(self) -> str:
        return f"order={self.order} examined={self.examined} pruned={self.pruned} found={self.found}"


@dataclass(frozen=True)
class Found:
    order: int
    witness: Graph


@dataclass(frozen=True)
class NotUpTo:
    """No graph of order ``<= bound`` attains the target; not a claim of infinity."""

    bound: int


@dataclass(frozen=True)
class KappaCertificate:
    target: QuadraticTarget
    result: Found | NotUpTo
    orders_searched: tuple[OrderStats, ...] = field(default_factory=tuple)

    @property
    def kappa(self) -> int | None:
        return self.result.order if isinstance(self.result, Found) else None


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    step = max(CHUNK, -(-total // parts))
    return [(s, min(s + step, total)) for s in range(0, total, step)]


def kappa(
    target,
    max_order: int = DEFAULT_MAX_ORDER,
    use_pruning: bool = True,
    jobs: int = 1,
    progress: Callable[[OrderStats], None] | None = None,
) -> KappaCertificate:
    """Smallest order of a graph whose spectral radius equals ``target``.

    ``target`` is a :class:`QuadraticTarget` or a positive integer. Orders
    ``1..max_order`` are scanned in turn; the witness is the first certified
    graph in edge-mask order. With pruning, an order is skipped when the
    target exceeds ``n - 1``, and targets with minimal polynomial ``x^2 - D``
    only look at bipartite graphs (skipping orders with target ``> n/2``).
    """
    t = as_target(target)
    report = check_condition_quadratic(t.b, t.c)
    if not report.satisfied:
        raise ConditionError(f"target {t}: {report.reason()}", report)
    if not 1 <= max_order <= HARD_MAX_ORDER:
        raise SROError(f"max_order must lie in 1..{HARD_MAX_ORDER}, got {max_order}")
    if jobs < 1:
        raise SROError("jobs must be >= 1")

    bipartite_only = use_pruning and t.is_pure_square_root()
    stats = []
    for n in range(1, max_order + 1):
        skip = use_pruning and (t.exceeds(n - 1) or (bipartite_only and t.exceeds(Fraction(n, 2))))
        if skip:
            st = OrderStats(n, 0, count_graphs(n, bipartite_only), 0, bipartite_only, skipped=True)
            stats.append(st)
            if progress:
                progress(st)
            continue

        total = 1 << comb(n, 2)
        res = RangeResult()
        if jobs == 1 or total <= CHUNK:
            res = scan_range(n, 0, total, t.b, t.c, bipartite_only)
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [
                    pool.submit(scan_range, n, s, e, t.b, t.c, bipartite_only) for s, e in _ranges(total, jobs)
                ]
                for fut in futures:
                    res.merge(fut.result())
        st = OrderStats(
            n, res.universe, 0, res.found, bipartite_only, False, res.degree_filtered, res.numeric_matches
        )
        stats.append(st)
        if progress:
            progress(st)
        if res.first_mask is not None:
            witness = Graph.from_mask(n, res.first_mask)
            verdict = verify_radius(witness, t)
            if not verdict.ok:
                raise AssertionError(f"witness failed re-verification: {verdict.reasons}")
            return KappaCertificate(t, Found(n, witness), tuple(stats))
    return KappaCertificate(t, NotUpTo(max_order), tuple(stats))
