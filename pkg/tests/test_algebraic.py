from __future__ import annotations

import math
from fractions import Fraction
from math import gcd, sqrt

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sro.algebraic import (
    HOFFMAN_LIMIT,
    PathOrder,
    QuadraticTarget,
    Rejected,
    SpecialTwo,
    TrigTarget,
    check_condition_quadratic,
    classify_leq2,
    equiangular_count,
    hoffman_alpha,
    hoffman_beta,
    lambda_from_alpha,
    psi_conjugates,
)
from sro.errors import SROError
from sro.graph import path
from sro.spectral import spectral_radius


def coprime_pairs(max_n: int):
    return [(k, n) for n in range(2, max_n + 1) for k in range(1, n) if gcd(k, n) == 1]


def conjugates(k: int, n: int) -> list[float]:
    """Galois conjugates of 2cos(2*pi*k/n): all 2cos(2*pi*j/n) with j coprime to n."""
    return [2 * math.cos(2 * math.pi * j / n) for j in range(1, n) if gcd(j, n) == 1]


# -- quadratic targets --------------------------------------------------------


def test_quadratic_target_values():
    t = QuadraticTarget(-2, -2)
    assert t.value == pytest.approx(1 + sqrt(3)) and t.conjugate == pytest.approx(1 - sqrt(3))
    assert t.degree == 2 and t.integer_value is None
    assert t.minimal_polynomial().coeffs == (-2, -2, 1)
    k = QuadraticTarget.from_integer(3)
    assert (k.b, k.c, k.degree, k.integer_value) == (-6, 9, 1, 3)
    assert k.minimal_polynomial().coeffs == (-3, 1)
    assert QuadraticTarget(-1, -2).integer_value == 2
    assert QuadraticTarget(0, -6).is_pure_square_root()
    assert not QuadraticTarget(0, -4).is_pure_square_root()
    assert not QuadraticTarget(-1, -4).is_pure_square_root()
    with pytest.raises(SROError):
        QuadraticTarget(0, 2)


@given(st.integers(-20, 20), st.integers(-60, 20), st.fractions(-30, 30, max_denominator=50))
def test_exceeds_is_exact(b, c, t):
    if b * b - 4 * c < 0:
        return
    target = QuadraticTarget(b, c)
    # value > t  <=>  t is below the larger root: check on the polynomial itself
    lam_is_root_at_t = t * t + b * t + c
    expected = (2 * t + b < 0) or lam_is_root_at_t < 0
    assert target.exceeds(t) == expected
    assert target.exceeds(target.ceil() - 1) and not target.exceeds(target.ceil())


@given(st.integers(-20, 20), st.integers(-60, 20))
def test_bracket_isolates_value(b, c):
    if b * b - 4 * c < 0:
        return
    t = QuadraticTarget(b, c)
    br = t.bracket()
    assert br.width <= Fraction(1, 10**12)
    assert br.lo < Fraction(t.value) + Fraction(1, 10**9) and Fraction(t.value) - Fraction(1, 10**9) < br.hi
    if t.degree == 2:
        p = t.minimal_polynomial()
        assert (p(br.lo) > 0) != (p(br.hi) > 0)


def test_condition_examples():
    ok = check_condition_quadratic(-2, -2)
    assert ok.satisfied and ok.totally_real and ok.dominant and ok.positive
    bad = check_condition_quadratic(2, -2)
    assert not bad.dominant and not bad.satisfied
    assert "dominant" in bad.reason()
    nr = check_condition_quadratic(0, 2)
    assert not nr.totally_real and not nr.satisfied
    assert check_condition_quadratic(-4, 4).degree == 1


@pytest.mark.parametrize("b", range(-20, 21))
def test_condition_invariant(b):
    for c in range(-20, 21):
        rep = check_condition_quadratic(b, c)
        disc = b * b - 4 * c
        largest = (-b + sqrt(disc)) / 2 if disc >= 0 else None
        expected = b <= 0 and disc >= 0 and c <= (b * b) // 4 and largest > 0
        assert rep.satisfied == expected
        assert rep.satisfied == (rep.totally_real and rep.dominant and rep.positive)
        if disc >= 0 and disc != 0:
            # dominance in the numeric sense for the two roots of the quadratic
            other = (-b - sqrt(disc)) / 2
            assert rep.dominant == (largest >= abs(other) - 1e-12)


# -- 2cos(2 pi k/n) -----------------------------------------------------------


def test_trig_target_validation():
    assert TrigTarget(1, 10).value == pytest.approx(2 * math.cos(math.pi / 5))
    assert TrigTarget(0, 1).value == 2
    for k, n in [(2, 4), (0, 5), (5, 5), (-1, 3)]:
        with pytest.raises(SROError):
            TrigTarget(k, n)
    with pytest.raises(SROError):
        classify_leq2(3, 6)


def test_classify_examples():
    res = classify_leq2(1, 10)
    assert res == PathOrder(5) and res.witness_order == 4
    assert spectral_radius(path(4)) == pytest.approx((1 + sqrt(5)) / 2, abs=1e-12)
    rej = classify_leq2(1, 5)
    assert isinstance(rej, Rejected) and rej.reason == "dominance"
    assert rej.conjugate_value == pytest.approx(2 * math.cos(4 * math.pi / 5))
    assert classify_leq2(5, 6) == PathOrder(3)
    assert classify_leq2(0, 1) == SpecialTwo()
    assert classify_leq2(1, 4) == PathOrder(2)
    assert classify_leq2(3, 4) == PathOrder(2)
    assert spectral_radius(path(1)) == 0


def test_psi_conjugates():
    assert [j for j, _ in psi_conjugates(10)] == [1, 3]
    assert [j for j, _ in psi_conjugates(7)] == [1, 2, 3]
    values = sorted(v for _, v in psi_conjugates(12))
    assert values == pytest.approx(sorted({round(v, 12) for v in conjugates(1, 12)}))


@pytest.mark.parametrize("k,n", coprime_pairs(30))
def test_classify_against_brute_force(k, n):
    lam = 2 * math.cos(2 * math.pi * k / n)
    conj = conjugates(k, n)
    satisfies = lam > -1e-12 and all(lam >= abs(v) - 1e-12 for v in conj)
    res = classify_leq2(k, n)
    assert isinstance(res, PathOrder) == satisfies
    if isinstance(res, PathOrder):
        assert abs(lam - 2 * math.cos(math.pi / res.q)) <= 1e-12
        assert abs(lam - spectral_radius(path(res.q - 1))) <= 1e-9
    else:
        assert isinstance(res, Rejected) and res.reason == "dominance"
        v = res.conjugate_value
        assert abs(v) > lam + 1e-12
        assert min(abs(v - w) for w in conj) <= 1e-9
        # the same conjugate appears among the roots from psi_conjugates
        assert min(abs(v - w) for _, w in psi_conjugates(n)) <= 1e-9


def test_every_accepted_value_is_a_path_radius():
    accepted = {classify_leq2(k, n).q for k, n in coprime_pairs(30) if isinstance(classify_leq2(k, n), PathOrder)}
    # 2cos(pi/q) = 2cos(2pi/(2q)) is reachable with n = 2q <= 30
    assert accepted == set(range(2, 16))


# -- Hoffman limit points -------------------------------------------------------


def test_hoffman_examples():
    assert hoffman_alpha(1) == pytest.approx(2, abs=1e-12)
    plastic = max(r.real for r in np.roots([1, 0, -1, -1]) if abs(r.imag) < 1e-12)
    assert hoffman_beta(2) == pytest.approx(plastic, abs=1e-12)
    assert hoffman_alpha(2) == pytest.approx(sqrt(plastic) + 1 / sqrt(plastic), abs=1e-12)
    assert abs(hoffman_alpha(40) - HOFFMAN_LIMIT) <= 1e-4
    with pytest.raises(SROError):
        hoffman_alpha(0)


def test_hoffman_monotone_and_bounded():
    alphas = [hoffman_alpha(n) for n in range(1, 41)]
    assert all(a < b for a, b in zip(alphas, alphas[1:]))
    assert all(a < HOFFMAN_LIMIT for a in alphas)


@pytest.mark.parametrize("n", [2, 3, 5, 10, 25])
def test_hoffman_beta_against_numpy_roots(n):
    # x^(n+1) - x^(n-1) - ... - x - 1
    coeffs = [1, 0] + [-1] * n
    beta = max(r.real for r in np.roots(coeffs) if abs(r.imag) < 1e-9 and r.real > 0)
    assert hoffman_beta(n) == pytest.approx(beta, abs=1e-10)


# -- equiangular lines ----------------------------------------------------------


def test_equiangular_examples():
    assert equiangular_count(10, 2) == 18
    assert equiangular_count(10, 3) == 13
    assert equiangular_count(1, 7) == 0
    with pytest.raises(SROError):
        equiangular_count(10, 1)
    with pytest.raises(SROError):
        equiangular_count(0, 2)


@given(st.integers(1, 10**6), st.integers(2, 50))
def test_equiangular_floor_identity(d, kappa):
    extra = equiangular_count(d, kappa) - (d - 1)
    assert 0 <= extra <= (d - 1) / (kappa - 1) + 1


def test_lambda_from_alpha():
    assert lambda_from_alpha(1, 3) == 1
    assert lambda_from_alpha(1, 5) == 2
    assert lambda_from_alpha(2, 7) == Fraction(5, 4)
    for p, q in [(0, 3), (3, 3), (4, 3), (1, 0), (-1, 3)]:
        with pytest.raises(SROError):
            lambda_from_alpha(p, q)


@given(st.integers(1, 200), st.integers(1, 200))
def test_lambda_from_alpha_identity(p, q):
    if not p < q:
        return
    assert lambda_from_alpha(p, q) == Fraction(q - p, 2 * p)
