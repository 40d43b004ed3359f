"""Target numbers: quadratic integers, 2cos(2*pi*k/n) values and friends.

Covers the realizability condition for quadratic targets, the case analysis
that decides which ``2cos(2*pi*k/n)`` are spectral radii of paths, Hoffman's
limit points and the equiangular-lines count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import SROError
from .poly import IntPolynomial, RationalBracket, bisect_root

BRACKET_WIDTH = Fraction(1, 2**40)  # < 1e-12


def _is_square(v: int) -> bool:
    return v >= 0 and isqrt(v) ** 2 == v


@dataclass(frozen=True)
class QuadraticTarget:
    """The largest root of ``x^2 + b*x + c``."""

    b: int
    c: int

    def __post_init__(self):
        if self.discriminant < 0:
            raise SROError(f"x^2 + {self.b}x + {self.c} has no real roots")

    @classmethod
    def from_integer(cls, k: int) -> QuadraticTarget:
        """``k`` as the double root of ``(x - k)^2``."""
        return cls(-2 * k, k * k)

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.c

    @property
    def value(self) -> float:
        return (-self.b + math.sqrt(self.discriminant)) / 2

    @property
    def conjugate(self) -> float:
        return (-self.b - math.sqrt(self.discriminant)) / 2

    @property
    def degree(self) -> int:
        """Algebraic degree of the value: 1 when the discriminant is a square."""
        return 1 if _is_square(self.discriminant) else 2

    @property
    def integer_value(self) -> int | None:
        if self.degree != 1:
            return None
        return (-self.b + isqrt(self.discriminant)) // 2

    def minimal_polynomial(self) -> IntPolynomial:
        if self.degree == 1:
            return IntPolynomial([-self.integer_value, 1])
        return IntPolynomial([self.c, self.b, 1])

    def is_pure_square_root(self) -> bool:
        """Minimal polynomial of the form ``x^2 - D``, so ``-value`` is a conjugate."""
        return self.degree == 2 and self.b == 0

    def exceeds(self, t) -> bool:
        """Exact test ``value > t`` for a rational ``t``."""
        t = Fraction(t)
        # value > t  <=>  sqrt(D) > 2t + b
        rhs = 2 * t + self.b
        return rhs < 0 or self.discriminant > rhs * rhs

    def ceil(self) -> int:
        """Smallest integer ``>= value``, computed exactly."""
        k = math.floor(self.value)
        while self.exceeds(k):
            k += 1
        while k - 1 >= 0 and not self.exceeds(k - 1):
            k -= 1
        return k

    def bracket(self, width: Fraction = BRACKET_WIDTH) -> RationalBracket:
        """Rational interval of width ``<= width`` containing only ``value``
        among the roots of the minimal polynomial."""
        if self.degree == 1:
            r = self.integer_value
            return RationalBracket(r - width / 2, r + width / 2)
        s = isqrt(self.discriminant)
        start = RationalBracket(Fraction(-self.b + s, 2), Fraction(-self.b + s + 1, 2))
        return bisect_root(self.minimal_polynomial(), start, width)

    def __str__(self) -> str:
        return f"x^2 + ({self.b})x + ({self.c})"


@dataclass(frozen=True)
class ConditionReport:
    totally_real: bool
    dominant: bool
    positive: bool
    satisfied: bool
    degree: int | None = None

    def reason(self) -> str:
        failed = [name for name in ("totally_real", "dominant", "positive") if not getattr(self, name)]
        if not failed:
            return "satisfied"
        return "failed: " + ", ".join(failed)


def check_condition_quadratic(b: int, c: int) -> ConditionReport:
    """Is the largest root of ``x^2 + bx + c`` a candidate spectral radius?

    The report speaks about the two roots of the given quadratic: ``dominant``
    means the larger root is at least the absolute value of the other one,
    i.e. ``b <= 0``.
    """
    disc = b * b - 4 * c
    totally_real = disc >= 0
    dominant = b <= 0
    positive = totally_real and QuadraticTarget(b, c).exceeds(0)
    degree = QuadraticTarget(b, c).degree if totally_real else 2
    satisfied = dominant and c <= (b * b) // 4 and positive
    return ConditionReport(totally_real, dominant, positive, satisfied, degree)


# -- numbers of the form 2cos(2*pi*k/n) ----------------------------------------


@dataclass(frozen=True)
class TrigTarget:
    """``2cos(2*pi*k/n)`` with ``gcd(k, n) = 1`` and ``0 < k < n``.

    ``(0, 1)`` is also accepted and stands for the value 2.
    """

    k: int
    n: int

    def __post_init__(self):
        if (self.k, self.n) == (0, 1):
            return
        if not 0 < self.k < self.n:
            raise SROError(f"need 0 < k < n, got k={self.k}, n={self.n}")
        if gcd(self.k, self.n) != 1:
            raise SROError(f"k={self.k} and n={self.n} are not coprime")

    @property
    def value(self) -> float:
        return 2 * math.cos(2 * math.pi * self.k / self.n)

    def __str__(self) -> str:
        return f"{self.k}/{self.n}"


def psi_conjugates(n: int) -> list[tuple[int, float]]:
    """Roots ``2cos(2*pi*j/n)`` of the scaled minimal polynomial of
    ``2cos(2*pi/n)``: ``1 <= j <= n/2`` with ``gcd(j, n) = 1``."""
    return [(j, 2 * math.cos(2 * math.pi * j / n)) for j in range(1, n // 2 + 1) if gcd(j, n) == 1]


@dataclass(frozen=True)
class PathOrder:
    """The target equals ``2cos(pi/q)``, the spectral radius of a path on ``q - 1`` vertices."""

    q: int

    @property
    def witness_order(self) -> int:
        return self.q - 1


@dataclass(frozen=True)
class SpecialTwo:
    """The target is 2, realized by the triangle."""


@dataclass(frozen=True)
class Rejected:
    """``reason`` is ``"dominance"``: ``conjugate`` is a conjugate with larger
    absolute value, written as ``2cos(2*pi*j/m)``. A negative target is its
    own witness."""

    reason: str
    conjugate: tuple[int, int] | None = None

    @property
    def conjugate_value(self) -> float | None:
        if self.conjugate is None:
            return None
        j, m = self.conjugate
        return 2 * math.cos(2 * math.pi * j / m)


def _index(j: int, m: int) -> tuple[int, int]:
    g = gcd(j, m)
    return (j // g, m // g)


def classify_leq2(k: int, n: int) -> PathOrder | SpecialTwo | Rejected:
    """Decide whether ``2cos(2*pi*k/n)`` is a spectral radius, and of which path."""
    TrigTarget(k, n)
    if (k, n) == (0, 1):
        return SpecialTwo()

    if 2 * k <= n:
        # minimal polynomial roots 2cos(2*pi*j/n), j <= n/2 coprime; largest at j = 1
        if k != 1:
            return Rejected("dominance", _index(1, n))
        if n % 2 == 1:
            return Rejected("dominance", _index((n - 1) // 2, n))
        if n == 2:
            return Rejected("dominance", _index(1, 2))
        # n = 4 gives 0, the radius of a single vertex
        return PathOrder(n // 2)

    # value = -2cos(2*pi*p/q) with p/q = (2k - n)/(2n) in lowest terms, 1 <= p <= q/2;
    # roots of the minimal polynomial are -2cos(2*pi*j/q)
    frac = Fraction(2 * k - n, 2 * n)
    p, q = frac.numerator, frac.denominator

    def negated(j: int) -> tuple[int, int]:
        # -2cos(2*pi*j/q) = 2cos(2*pi*(q - 2j)/(2q))
        return _index(q - 2 * j, 2 * q)

    if q % 2 == 1:
        ell = (q - 1) // 2
        if p == ell:
            return PathOrder(q)
        return Rejected("dominance", negated(ell))
    ell = q // 2
    if p == ell - 1:
        return PathOrder(ell)
    return Rejected("dominance", negated(1))


# -- Hoffman limit points ------------------------------------------------------


def hoffman_polynomial(n: int, x: float) -> float:
    """``x^(n+1) - (1 + x + ... + x^(n-1))``."""
    return x ** (n + 1) - sum(x**i for i in range(n))


def hoffman_beta(n: int, tol: float = 1e-13) -> float:
    if n < 1:
        raise SROError("n must be >= 1")
    lo, hi = 1.0, 2.0
    if hoffman_polynomial(n, lo) == 0:
        return lo
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if hoffman_polynomial(n, mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def hoffman_alpha(n: int, tol: float = 1e-13) -> float:
    beta = hoffman_beta(n, tol)
    return math.sqrt(beta) + 1 / math.sqrt(beta)


HOFFMAN_LIMIT = math.sqrt(2 + math.sqrt(5))


# -- equiangular lines -----------------------------------------------------------


def equiangular_count(d: int, kappa: int) -> int:
    """``floor((d-1) * kappa / (kappa-1))``."""
    if d < 1:
        raise SROError("dimension must be >= 1")
    if kappa <= 1:
        raise SROError("kappa must be >= 2")
    return (d - 1) * kappa // (kappa - 1)


def lambda_from_alpha(p: int, q: int) -> Fraction:
    """``(1 - alpha) / (2 alpha)`` for ``alpha = p/q``."""
    if q == 0:
        raise SROError("zero denominator")
    alpha = Fraction(p, q)
    if not 0 < alpha < 1:
        raise SROError(f"alpha must lie in (0, 1), got {alpha}")
    return (1 - alpha) / (2 * alpha)
