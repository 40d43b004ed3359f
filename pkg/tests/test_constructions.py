from __future__ import annotations

import itertools
from fractions import Fraction
from math import sqrt

import networkx as nx
import numpy as np
import pytest

from conftest import atlas, numpy_radius, to_nx
from sro.algebraic import QuadraticTarget, check_condition_quadratic
from sro.constructions import (
    QuotientMatrix2,
    family_bipartite_witness,
    family_join_witness,
    join_witness_radius,
    join_witness_ratio,
    quadratic_realization,
    quotient_matrix,
    realize_product,
    realize_quadratic,
    realize_signless_laplacian_radius,
    realize_sum,
    regular_graph,
    verify_equitable,
)
from sro.errors import ConditionError, NotEquitableError, SROError
from sro.graph import Graph, complete, complete_bipartite, path
from sro.poly import IntPolynomial, char_poly, divides
from sro.spectral import perron, signless_laplacian_radius, spectral_radii, spectral_radius


def test_regular_graph_examples():
    g = regular_graph(6, 3)
    assert set(g.degrees()) == {3}
    assert regular_graph(6, 1).edges() == [(0, 3), (1, 4), (2, 5)]
    assert regular_graph(4, 0).edge_count == 0
    assert regular_graph(5, 4) == complete(5)
    with pytest.raises(SROError, match="n >= k"):
        regular_graph(3, 3)
    with pytest.raises(SROError, match="even"):
        regular_graph(5, 3)


@pytest.mark.parametrize("n", range(1, 13))
def test_regular_graph_exhaustive(n):
    for k in range(n):
        if n >= k + 1 and n * k % 2 == 0:
            assert set(regular_graph(n, k).degrees()) == {k}
        else:
            with pytest.raises(SROError):
                regular_graph(n, k)


def test_quotient_matrix_shapes():
    assert quotient_matrix(-2, -2) == QuotientMatrix2(1, 1, 3, 1)
    assert quotient_matrix(-1, -4) == QuotientMatrix2(1, 1, 4, 0)
    for b in range(-9, 1):
        for c in range(-20, (b * b) // 4):
            q = quotient_matrix(b, c)
            assert q.char_poly() == (b, c)
            assert min(q.a11, q.a12, q.a21, q.a22) >= 0 and q.a21 >= 1


def test_example_realization():
    r = quadratic_realization(-2, -2, 2)
    g = r.graph
    assert (g.n, g.edge_count) == (8, 10)
    assert r.blocks == ((0, 1, 2, 3, 4, 5), (6, 7))
    assert divides(QuadraticTarget(-2, -2).minimal_polynomial(), char_poly(g))
    assert abs(spectral_radius(g) - (1 + sqrt(3))) <= 1e-9
    ep = verify_equitable(g, r.blocks)
    assert ep.quotient == ((1, 1), (3, 1))
    assert np.array_equal(ep.quotient_array(), [[1.0, 1.0], [3.0, 1.0]])


def test_another_graph_with_the_same_quotient():
    # three disjoint edges, one more edge 6-7, and each of 6, 7 joined to a group of three
    g = Graph.from_edges(8, [(0, 1), (2, 3), (4, 5), (6, 7), (0, 6), (1, 6), (2, 6), (3, 7), (4, 7), (5, 7)])
    assert abs(spectral_radius(g) - (1 + sqrt(3))) <= 1e-9
    assert verify_equitable(g, [range(6), [6, 7]]).quotient == ((1, 1), (3, 1))
    ours = realize_quadratic(-2, -2, 2)
    # both are equitable realizations of the same quotient, but not the same graph
    assert not nx.is_isomorphic(to_nx(g), to_nx(ours))
    assert divides(QuadraticTarget(-2, -2).minimal_polynomial(), char_poly(g))


def test_realize_quadratic_examples():
    g = realize_quadratic(0, -2)
    assert nx.is_isomorphic(to_nx(g), nx.disjoint_union(nx.path_graph(3), nx.path_graph(3)))
    assert realize_quadratic(-4, 4) == complete(3)
    with pytest.raises(ConditionError):
        realize_quadratic(2, -2)
    with pytest.raises(ConditionError):
        realize_quadratic(0, 2)
    with pytest.raises(SROError):
        realize_quadratic(-2, -2, 1)
    with pytest.raises(SROError):
        realize_quadratic(-2, -2, 3)


def _sweep(b_range, c_min):
    for b in b_range:
        for c in range(c_min, (b * b) // 4 + 1):
            if check_condition_quadratic(b, c).satisfied:
                yield b, c


@pytest.mark.slow
@pytest.mark.parametrize("b", range(-8, 1))
def test_realization_sweep(b):
    for _, c in _sweep([b], -20):
        r = quadratic_realization(b, c)
        g = r.graph
        target = QuadraticTarget(b, c)
        p = char_poly(g)
        if c == (b * b) // 4:
            # integer target realized by a complete graph: only x - m divides
            assert target.degree == 1
            assert divides(target.minimal_polynomial(), p)
        else:
            assert divides(IntPolynomial([c, b, 1]), p)
        lam = spectral_radius(g)
        assert abs(lam - target.value) <= 1e-9
        if r.quotient is None:
            assert g == complete(-(b // 2) + 1)
            continue
        ep = verify_equitable(g, r.blocks)
        assert ep.quotient == tuple(tuple(Fraction(x) for x in row) for row in r.quotient.as_rows())
        assert abs(r.quotient.spectral_radius - lam) <= 1e-9


@pytest.mark.parametrize("b,c,M", [(-2, -2, 4), (-3, -1, 4), (0, -5, 2), (-5, 2, 6)])
def test_larger_M_still_realizes(b, c, M):
    r = quadratic_realization(b, c, M)
    assert abs(spectral_radius(r.graph) - QuadraticTarget(b, c).value) <= 1e-9
    verify_equitable(r.graph, r.blocks)


def test_verify_equitable_examples():
    ep = verify_equitable(complete_bipartite(2, 3), [[0, 1], [2, 3, 4]])
    assert ep.quotient == ((0, 3), (2, 0))
    ep = verify_equitable(path(3), [[0, 2], [1]])
    assert ep.quotient == ((0, 1), (2, 0))
    with pytest.raises(NotEquitableError) as info:
        verify_equitable(path(4), [[0, 1], [2, 3]])
    assert info.value.vertex is not None and info.value.block is not None
    with pytest.raises(SROError):
        verify_equitable(path(3), [[0], [1]])
    with pytest.raises(SROError):
        verify_equitable(path(3), [[0, 1], [1, 2]])


def test_family_witnesses():
    g = family_bipartite_witness(2, 1)
    assert g == complete_bipartite(2, 3)
    assert spectral_radius(g) == pytest.approx(sqrt(6), abs=1e-12)
    j = family_join_witness(4, 2)
    assert (j.n, j.edge_count) == (4, 5)
    assert spectral_radius(j) == pytest.approx((1 + sqrt(17)) / 2, abs=1e-12)
    with pytest.raises(SROError):
        family_join_witness(3, 3)
    with pytest.raises(SROError):
        family_join_witness(3, 1)
    with pytest.raises(SROError):
        family_bipartite_witness(0, 1)


@pytest.mark.parametrize("n", range(3, 13))
def test_join_witness_perron_ratio(n):
    for m in range(2, n):
        g = family_join_witness(n, m)
        pd = perron(g)
        x = np.array(pd.vector)
        assert np.ptp(x[: n - m]) < 1e-12 and np.ptp(x[n - m :]) < 1e-12
        assert abs(x[n - m] / x[0] - join_witness_ratio(n, m)) <= 1e-9
        assert abs(pd.radius - join_witness_radius(n, m)) <= 1e-9


def test_sum_and_product_examples():
    assert spectral_radius(realize_sum(complete(2), complete(3))) == pytest.approx(3, abs=1e-12)
    assert spectral_radius(realize_product(path(3), path(3))) == pytest.approx(2, abs=1e-12)
    assert spectral_radius(realize_sum(path(3), path(3))) == pytest.approx(2 * sqrt(2), abs=1e-12)


def test_sum_and_product_contracts():
    corpus = atlas(5, connected=True)
    radius = {g: numpy_radius(g) for g in corpus}
    pairs = list(itertools.product(corpus, repeat=2))
    sums = spectral_radii(realize_sum(g1, g2) for g1, g2 in pairs)
    prods = spectral_radii(realize_product(g1, g2) for g1, g2 in pairs)
    for (g1, g2), s, p in zip(pairs, sums, prods):
        assert abs(s - (radius[g1] + radius[g2])) <= 1e-9
        assert abs(p - radius[g1] * radius[g2]) <= 1e-9


def test_signless_examples():
    assert realize_signless_laplacian_radius(complete(2)) == complete(3)
    assert spectral_radius(realize_signless_laplacian_radius(path(3))) == pytest.approx(3, abs=1e-12)
    assert spectral_radius(realize_signless_laplacian_radius(complete(3))) == pytest.approx(4, abs=1e-12)
    assert realize_signless_laplacian_radius(Graph.empty(3)) == complete(1)
    with pytest.raises(SROError):
        realize_signless_laplacian_radius(Graph.empty(0))


def test_signless_contract_connected_upto6():
    corpus = [g for g in atlas(6, connected=True) if g.edge_count]
    outs = spectral_radii(realize_signless_laplacian_radius(g) for g in corpus)
    for g, lam in zip(corpus, outs):
        a = g.adjacency_matrix(np.float64)
        mu = np.linalg.eigvalsh(a + np.diag(a.sum(axis=1)))[-1]
        assert abs(lam - mu) <= 1e-9
        assert abs(signless_laplacian_radius(g) - mu) <= 1e-9
