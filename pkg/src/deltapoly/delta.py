"""Delta operators and their basic sequences of binomial type.

A delta operator is Q = g(D) where D is differentiation on polynomials
and g is a formal power series with g(0) = 0 and g'(0) != 0. Each Q owns
a unique basic sequence

    w_0 = 1,   w_n(0) = 0,   Q w_n = n w_{n-1},

and every basic sequence is of binomial type:

    w_n(s + t) = sum_k C(n, k) w_k(s) w_{n-k}(t).

The family treated in closed form here is Q = a*D - b*D**(p+1), whose
basic polynomials are

    w_n(t) = sum_{j=0}^{floor((n-1)/p)}
             (n+j-1)! b^j / (j! (n-jp-1)! a^{n+j}) * t^{n-jp},

and whose exponential generating function is exp(t f(x)) with f the
compositional inverse of g(x) = a x - b x^{p+1}, given by the
Fuss-Catalan series: [x^{jp+1}] f = Fuss_{p+1}(j) b^j / a^{(p+1)j+1}.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .fuss import fuss_number
from .series import (
    DEFAULT_ORDER,
    FormalPowerSeries,
    Poly,
    poly_diff,
    poly_eval,
    taylor_shift,
)


@dataclass(frozen=True)
class AbTriple:
    """Parameters of the operator a*D - b*D**(p+1); a != 0, p >= 1."""

    a: Fraction
    b: Fraction
    p: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a == 0:
            raise ValueError("a must be nonzero")
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError("p must be a positive integer")


@dataclass(frozen=True)
class DeltaOperator:
    """g(D) with g(0) = 0 and g'(0) != 0, acting on polynomials."""

    g: FormalPowerSeries

    def __post_init__(self):
        if self.g.order < 1 or self.g[0] != 0:
            raise ValueError("delta operator needs g(0) = 0")
        if self.g[1] == 0:
            raise ValueError("delta operator needs g'(0) != 0")

    @classmethod
    def from_ab(cls, abp: AbTriple, order: int = DEFAULT_ORDER) -> "DeltaOperator":
        order = max(order, abp.p + 1)
        coeffs = [Fraction(0)] * (order + 1)
        coeffs[1] = abp.a
        coeffs[abp.p + 1] = -abp.b
        return cls(FormalPowerSeries(coeffs, order))

    @classmethod
    def derivative(cls, order: int = DEFAULT_ORDER) -> "DeltaOperator":
        """Q = D itself."""
        return cls(FormalPowerSeries.identity(order))

    @classmethod
    def forward_difference(cls, order: int = DEFAULT_ORDER) -> "DeltaOperator":
        """Q = exp(D) - 1, i.e. Qp(t) = p(t+1) - p(t).

        The series is truncated at `order`; D^{n+1} annihilates degree-n
        polynomials, so the truncation is exact up to that degree.
        """
        coeffs = [Fraction(0)] + [Fraction(1, math.factorial(k)) for k in range(1, order + 1)]
        return cls(FormalPowerSeries(coeffs, order))


def apply_delta(op: DeltaOperator, p: Poly) -> Poly:
    """sum_k g_k D^k p; finite because D lowers degree."""
    result = Poly()
    dk = p
    for k in range(1, min(op.g.order, p.degree) + 1):
        dk = poly_diff(dk)
        if not dk:
            break
        c = op.g[k]
        if c:
            result = result + c * dk
    return result


@dataclass(frozen=True)
class BinomialSequence:
    """Polynomials w_0..w_n with w_0 = 1, w_n(0) = 0, deg w_n = n."""

    polys: tuple[Poly, ...]
    source: str = "generic"

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        if not self.polys or self.polys[0] != Poly([1]):
            raise ValueError("w_0 must be the constant polynomial 1")
        for n, w in enumerate(self.polys[1:], start=1):
            if w.degree != n:
                raise ValueError(f"w_{n} must have degree {n}")
            if w.coeffs[0] != 0:
                raise ValueError(f"w_{n}(0) must vanish")

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    def __iter__(self):
        return iter(self.polys)


def basic_sequence_generic(op: DeltaOperator, nmax: int) -> BinomialSequence:
    """Solve Q w_n = n w_{n-1} with w_n(0) = 0 degree by degree.

    Q drops degree by exactly one, so in the coefficients of w_n the
    system is triangular with pivots m*g_1. Works for any delta operator;
    op.g must carry coefficients up to order nmax.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    if op.g.order < nmax:
        raise ValueError("operator series truncated below nmax")
    g1 = op.g[1]
    q_mono = [Poly()] * (nmax + 1)
    for m in range(1, nmax + 1):
        q_mono[m] = apply_delta(op, Poly.monomial(m))
    polys = [Poly([1])]
    for n in range(1, nmax + 1):
        prev = polys[n - 1].coeffs
        residual = [n * prev[j] if j < len(prev) else Fraction(0) for j in range(n)]
        coeffs = [Fraction(0)] * (n + 1)
        for m in range(n, 0, -1):
            um = residual[m - 1] / (m * g1)
            coeffs[m] = um
            if um:
                for j, c in enumerate(q_mono[m].coeffs):
                    residual[j] -= um * c
        polys.append(Poly(coeffs))
    return BinomialSequence(tuple(polys), source="generic")


def basic_sequence_closed(abp: AbTriple, nmax: int) -> BinomialSequence:
    """Closed-form basic polynomials of a*D - b*D**(p+1) (see module
    docstring); w_1(t) = t/a, and b = 0 collapses to (t/a)^n."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    a, b, p = abp.a, abp.b, abp.p
    polys = [Poly([1])]
    for n in range(1, nmax + 1):
        coeffs = [Fraction(0)] * (n + 1)
        for j in range((n - 1) // p + 1):
            num = math.factorial(n + j - 1) * b**j
            den = math.factorial(j) * math.factorial(n - j * p - 1) * a**(n + j)
            coeffs[n - j * p] = num / den
        polys.append(Poly(coeffs))
    return BinomialSequence(tuple(polys), source="closed")


def f_series(abp: AbTriple, order: int = DEFAULT_ORDER) -> FormalPowerSeries:
    """The compositional inverse of a x - b x^{p+1} through Fuss numbers,
    independent of fps_reverse: only powers x^{jp+1} appear."""
    if order < 1:
        raise ValueError("order must be >= 1")
    a, b, p = abp.a, abp.b, abp.p
    coeffs = [Fraction(0)] * (order + 1)
    j = 0
    while j * p + 1 <= order:
        coeffs[j * p + 1] = fuss_number(p + 1, j) * b**j / a**((p + 1) * j + 1)
        j += 1
    return FormalPowerSeries(coeffs, order)


def binomial_identity_check(seq: BinomialSequence, n: int) -> bool:
    """w_n(s+t) = sum_k C(n,k) w_k(s) w_{n-k}(t) on the grid
    s, t in {0, ..., n}.

    Both sides are polynomials of degree <= n in each variable, so
    agreement on the (n+1) x (n+1) grid proves the identity.
    """
    if not 0 <= n < len(seq):
        raise ValueError("n out of range for this sequence")
    pts = [Fraction(v) for v in range(n + 1)]
    vals = [[poly_eval(seq[k], x) for x in pts] for k in range(n + 1)]
    binom = [math.comb(n, k) for k in range(n + 1)]
    for si, s in enumerate(pts):
        shifted = taylor_shift(seq[n], s)
        for ti, t in enumerate(pts):
            lhs = poly_eval(shifted, t)
            rhs = sum(binom[k] * vals[k][si] * vals[n - k][ti] for k in range(n + 1))
            if lhs != rhs:
                return False
    return True


def random_triples(count: int, seed: int, max_p: int = 3) -> list[AbTriple]:
    """Seeded draws of AbTriple with numerators and denominators <= 5."""
    rng = random.Random(seed)
    nonzero = [v for v in range(-5, 6) if v != 0]
    out = []
    for _ in range(count):
        a = Fraction(rng.choice(nonzero), rng.randint(1, 5))
        b = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        out.append(AbTriple(a, b, rng.randint(1, max_p)))
    return out
