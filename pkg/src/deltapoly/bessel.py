"""Bessel polynomials and the basic polynomials of D - D**2/2.

The Bessel polynomials are

    y_n(t) = sum_{j=0}^{n} (n+j)! / (j! (n-j)!) (t/2)^j,

and the basic sequence of the delta operator D - D**2/2 is

    w_n(t) = sum_{j=0}^{n-1} (n+j-1)! t^{n-j} / (j! (n-j-1)! 2^j).

The two are tied together by w_n(t) = t^n y_{n-1}(1/t) for n >= 1 and by
the exponential generating function

    sum_n y_n(t) x^n / n! = exp((1 - sqrt(1-2tx))/t) / sqrt(1-2tx).

Everything in this module is exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .delta import BinomialSequence
from .series import (
    FormalPowerSeries,
    Poly,
    RationalLike,
    fps_exp,
    fps_recip,
    fps_sqrt,
    poly_eval,
)


@dataclass(frozen=True)
class BesselPolySeq:
    """Bessel polynomials y_0..y_n; y_n has degree n and y_n(0) = 1."""

    polys: tuple[Poly, ...]

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    def __iter__(self):
        return iter(self.polys)


def bessel_poly(nmax: int) -> BesselPolySeq:
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    polys = []
    for n in range(nmax + 1):
        coeffs = [
            Fraction(math.factorial(n + j), math.factorial(j) * math.factorial(n - j) * 2**j)
            for j in range(n + 1)
        ]
        polys.append(Poly(coeffs))
    return BesselPolySeq(tuple(polys))


def carlitz_w(nmax: int) -> BinomialSequence:
    """The basic sequence of D - D**2/2 from its own explicit sum, not
    from the generic solver or the (a, b, p) closed form."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    polys = [Poly([1])]
    for n in range(1, nmax + 1):
        coeffs = [Fraction(0)] * (n + 1)
        for j in range(n):
            coeffs[n - j] = Fraction(
                math.factorial(n + j - 1),
                math.factorial(j) * math.factorial(n - j - 1) * 2**j,
            )
        polys.append(Poly(coeffs))
    return BinomialSequence(tuple(polys), source="carlitz")


def w_bessel_relation_check(nmax: int) -> bool:
    """t^n y_{n-1}(1/t) == w_n(t) as polynomials, for 1 <= n <= nmax.

    (At n = 0 the relation is ill-typed: w_0 = 1 has no y_{-1} partner.)
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    ws = carlitz_w(nmax)
    ys = bessel_poly(nmax - 1)
    for n in range(1, nmax + 1):
        coeffs = [Fraction(0)] * (n + 1)
        for j, c in enumerate(ys[n - 1].coeffs):
            coeffs[n - j] = c
        if Poly(coeffs) != ws[n]:
            return False
    return True


def bessel_egf_check(t0: RationalLike, order: int = 12) -> bool:
    """sum_{n<=order} y_n(t0) x^n / n! == exp((1-sqrt(1-2 t0 x))/t0) / sqrt(1-2 t0 x),
    both sides expanded exactly to the given order."""
    t0 = Fraction(t0)
    if t0 == 0:
        raise ValueError("t0 must be nonzero")
    if order < 1:
        raise ValueError("order must be >= 1")
    ys = bessel_poly(order)
    lhs = FormalPowerSeries(
        [poly_eval(ys[n], t0) / math.factorial(n) for n in range(order + 1)], order)
    root = fps_sqrt(FormalPowerSeries([1, -2 * t0], order))
    rhs = fps_exp((1 - root) * (1 / t0)) * fps_recip(root)
    return lhs == rhs
