"""Fuss numbers and Fuss-Catalan generating functions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .series import FormalPowerSeries


def fuss_number(p: int, n: int) -> Fraction:
    """The Fuss number C(n*p + 1, n) / (n*p + 1), an integer for p >= 1.

    Computed straight from the binomial coefficient, never from the
    functional equation, so that B_p = 1 + x B_p^p stays an independent
    check on series built from these values. p = 2 gives the Catalan
    numbers.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    return Fraction(math.comb(n * p + 1, n), n * p + 1)


@dataclass(frozen=True)
class FussSeries:
    """Truncated generating function sum_n Fuss_p(n) x^n."""

    p: int
    series: FormalPowerSeries


def fuss_series(p: int, order: int) -> FussSeries:
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [fuss_number(p, n) for n in range(order + 1)]
    return FussSeries(p, FormalPowerSeries(coeffs, order))
