"""Exact integer polynomials, characteristic polynomials and Sturm counting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm

import numpy as np

from .errors import SROError
from .graph import Graph


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, lowest degree first.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPolynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)])

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def format_poly(coeffs) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(f"{c}")
        elif k == 1:
            terms.append(f"{c}*x")
        else:
            terms.append(f"{c}*x^{k}")
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class RationalBracket:
    lo: Fraction
    hi: Fraction

    def __init__(self, lo, hi):
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise SROError(f"bracket needs lo < hi, got ({lo}, {hi})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


# -- characteristic polynomial ---------------------------------------------


MODULAR_THRESHOLD = 24  # above this order, char_poly switches to the multi-modular method
_PRIME_CEILING = 1 << 26  # keeps p^2 * n inside int64 for n < 2^11


def char_poly(g: Graph) -> IntPolynomial:
    """``det(xI - A)`` with exact integer coefficients.

    Small orders use Faddeev-LeVerrier over Python integers; larger ones use
    Hessenberg reduction modulo word-sized primes and Chinese remaindering,
    with enough primes to cover the coefficient bound ``(1 + maxdeg)^n``.
    """
    if g.n < 1:
        raise SROError("characteristic polynomial needs at least one vertex")
    if g.n > MODULAR_THRESHOLD:
        return char_poly_modular(g.adjacency_matrix(np.int64))
    return char_poly_matrix(g.adjacency_matrix())


def char_poly_matrix(matrix) -> IntPolynomial:
    """Faddeev-LeVerrier over Python integers (any integer matrix)."""
    a = np.array(matrix, dtype=object)
    n = a.shape[0]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    eye = np.eye(n, dtype=np.int64).astype(object)
    m = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        m = a.dot(m) + coeffs[n - k + 1] * eye
        trace = int(np.trace(a.dot(m)))
        if trace % k:
            raise ArithmeticError("Faddeev-LeVerrier step produced a non-integer coefficient")
        coeffs[n - k] = -trace // k
    return IntPolynomial(coeffs)


def char_poly_modular(matrix) -> IntPolynomial:
    """Multi-modular characteristic polynomial of a small-entry integer matrix."""
    a = np.array(matrix, dtype=np.int64)
    n = a.shape[0]
    if n == 0:
        return IntPolynomial([1])
    # |coefficients| <= prod(1 + |lambda_i|) <= (1 + max absolute row sum)^n
    row_bound = int(np.abs(a).sum(axis=1).max())
    bound = (1 + row_bound) ** n
    modulus = 1
    residues: list[int] | None = None
    for prime in _primes_below(_PRIME_CEILING):
        cs = _char_poly_mod(a, prime)
        if residues is None:
            residues = cs
        else:
            # CRT: combine x = residues (mod modulus) with cs (mod prime)
            inv = pow(modulus, -1, prime)
            residues = [r + modulus * (((c - r) * inv) % prime) for r, c in zip(residues, cs)]
        modulus *= prime
        if modulus > 2 * bound:
            break
    half = modulus // 2
    return IntPolynomial([r - modulus if r > half else r for r in residues])


_PRIMES: list[int] = []


def _primes_below(limit: int):
    """Primes below ``limit`` in descending order (cached)."""
    yield from _PRIMES
    candidate = _PRIMES[-1] - 2 if _PRIMES else (limit - 1) | 1
    while candidate > 2:
        if all(candidate % d for d in range(3, isqrt(candidate) + 1, 2)):
            _PRIMES.append(candidate)
            yield candidate
        candidate -= 2


def _char_poly_mod(a: np.ndarray, p: int) -> list[int]:
    """Coefficients (low first) of det(xI - a) mod ``p``: Hessenberg form, then
    the standard recurrence on its leading principal submatrices."""
    h = a % p
    n = h.shape[0]
    for j in range(n - 2):
        col = h[j + 1 :, j]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[piv, j + 1], :] = h[[j + 1, piv], :]
            h[:, [piv, j + 1]] = h[:, [j + 1, piv]]
        inv = pow(int(h[j + 1, j]), -1, p)
        u = (h[j + 2 :, j] * inv) % p
        if not u.any():
            continue
        # row_r -= u_r * row_{j+1}; then col_{j+1} += sum_r u_r * col_r (similarity)
        h[j + 2 :, :] = (h[j + 2 :, :] - u[:, None] * h[j + 1, :][None, :]) % p
        h[:, j + 1] = (h[:, j + 1] + (h[:, j + 2 :] % p) @ u) % p

    # polys[k] = char poly of the leading k x k block, padded to n + 1 coefficients
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    # t[i] = prod of subdiagonal entries h[i+1,i] .. h[k-1,k-2], for i < k - 1
    t = np.zeros(n, dtype=np.int64)
    for k in range(1, n + 1):
        m = k - 1
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = polys[m, :-1]
        cur = (cur - h[m, m] * polys[m]) % p
        if m > 0:
            t[:m] = (t[:m] * h[m, m - 1]) % p
            t[m - 1] = h[m, m - 1] % p
            w = (h[:m, m] * t[:m]) % p
            # term for i < m uses polys[i] with product of h[i+1,i]..h[m,m-1]
            cur = (cur - (w @ polys[:m]) % p) % p
        polys[k] = cur
    return [int(c) for c in polys[n]]


# -- division ---------------------------------------------------------------


def poly_divmod(p: IntPolynomial, d: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
    """Exact long division over the rationals; returns coefficient lists."""
    if d.is_zero():
        raise SROError("division by the zero polynomial")
    return _divmod_frac([Fraction(c) for c in p.coeffs], [Fraction(c) for c in d.coeffs])


def _divmod_frac(p: list[Fraction], d: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(p)
    dd = len(d) - 1
    if len(rem) - 1 < dd:
        return [], _strip(rem)
    quot = [Fraction(0)] * (len(rem) - dd)
    lead = d[-1]
    for k in range(len(rem) - 1 - dd, -1, -1):
        coef = rem[k + dd] / lead
        quot[k] = coef
        if coef:
            for i, c in enumerate(d):
                rem[k + i] -= coef * c
    return _strip(quot), _strip(rem[:dd])


def _strip(cs: list) -> list:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def divides(d: IntPolynomial, p: IntPolynomial) -> bool:
    _, rem = poly_divmod(p, d)
    return not rem


def quotient(p: IntPolynomial, d: IntPolynomial) -> IntPolynomial:
    """``p / d`` when the division is exact with an integral quotient."""
    quot, rem = poly_divmod(p, d)
    if rem:
        raise SROError(f"{d} does not divide {p}")
    if any(q.denominator != 1 for q in quot):
        raise SROError("quotient is not integral")
    return IntPolynomial([int(q) for q in quot])


# -- Sturm sequences --------------------------------------------------------


def _primitive(cs: list[Fraction]) -> list[int]:
    # scale by a positive rational to coprime integers; keeps every sign
    den = lcm(*(c.denominator for c in cs))
    ints = [int(c * den) for c in cs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]


def sturm_chain(p: IntPolynomial) -> list[list[int]]:
    if p.is_zero():
        raise SROError("Sturm chain of the zero polynomial")
    chain = [list(p.coeffs)]
    dp = p.derivative()
    if dp.is_zero():
        return chain
    chain.append(_primitive([Fraction(c) for c in dp.coeffs]))
    while True:
        _, rem = _divmod_frac([Fraction(c) for c in chain[-2]], [Fraction(c) for c in chain[-1]])
        if not rem:
            return chain
        chain.append(_primitive([-c for c in rem]))


def _eval(cs: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _variations(chain: list[list[int]], x: Fraction) -> int:
    signs = [v > 0 for v in (_eval(cs, x) for cs in chain) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _deflate(p: IntPolynomial, root: Fraction) -> IntPolynomial:
    # strip every factor (den*x - num) of the rational root
    factor = IntPolynomial([-root.numerator, root.denominator])
    while p(root) == 0:
        quot, _ = poly_divmod(p, factor)
        p = IntPolynomial(_primitive(quot) if quot else [1])
        if p.leading < 0:
            p = -p
    return p


def sturm_count(p: IntPolynomial, bracket: RationalBracket) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    A rational endpoint that is itself a root is divided out exactly before
    the chain is built (and counted once when it is ``hi``).
    """
    if p.is_zero():
        raise SROError("root count of the zero polynomial")
    lo, hi = bracket.lo, bracket.hi
    extra = 0
    if p(lo) == 0:
        p = _deflate(p, lo)
    if p(hi) == 0:
        p = _deflate(p, hi)
        extra = 1
    if p.degree <= 0:
        return extra
    chain = sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi) + extra


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """Every complex root has absolute value strictly below this."""
    lead = abs(p.leading)
    return 1 + max((Fraction(abs(c), lead) for c in p.coeffs[:-1]), default=Fraction(0))


def real_root_count(p: IntPolynomial) -> int:
    b = cauchy_bound(p)
    return sturm_count(p, RationalBracket(-b, b))


def certify_largest_root(p: IntPolynomial, minpoly: IntPolynomial, bracket: RationalBracket) -> bool:
    """True iff the root of ``minpoly`` isolated by ``bracket`` is the largest
    real root of ``p``.

    Raises when ``minpoly`` does not divide ``p`` or when ``bracket`` does not
    isolate the largest root of ``minpoly``.
    """
    if not divides(minpoly, p):
        raise SROError(f"{minpoly} does not divide {p}")
    if sturm_count(minpoly, bracket) != 1 or _roots_above(minpoly, bracket.hi) != 0:
        raise SROError("bracket does not isolate the largest root of the minimal polynomial")
    return _roots_above(p, bracket.hi) == 0


def _roots_above(p: IntPolynomial, x: Fraction) -> int:
    bound = cauchy_bound(p)
    if x >= bound:
        return 0
    return sturm_count(p, RationalBracket(x, bound))


def bisect_root(p: IntPolynomial, bracket: RationalBracket, width: Fraction) -> RationalBracket:
    """Shrink a sign-change bracket of ``p`` by exact bisection."""
    lo, hi = bracket.lo, bracket.hi
    flo = p(lo)
    if flo == 0 or p(hi) == 0 or (flo > 0) == (p(hi) > 0):
        raise SROError("bisection needs a strict sign change at non-root endpoints")
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = p(mid)
        if fm == 0:
            # exact rational root: keep it strictly inside a tiny bracket
            return RationalBracket(mid - width / 4, mid + width / 4)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return RationalBracket(lo, hi)
