"""Exact kernels: rationals, dense polynomials, truncated power series.

Coefficients are `fractions.Fraction` throughout, so they are always in
lowest terms with positive denominator and never overflow. All objects
here are immutable and all operations are pure functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

#: Default truncation order for power-series constructions.
DEFAULT_ORDER = 32

RationalLike = Union[Fraction, int, str]


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", or plain "p" for an integer."""
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


def _strip(coeffs: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Poly:
    """Dense univariate polynomial; coeffs[k] multiplies t**k.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        self.coeffs = _strip(coeffs)

    @classmethod
    def monomial(cls, power: int, coeff: RationalLike = 1) -> "Poly":
        if power < 0:
            raise ValueError("power must be >= 0")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Poly(out)

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[i + j] += a * b
            return Poly(out)
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            return Poly([s * c for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


def poly_diff(p: Poly) -> Poly:
    """Formal derivative."""
    return Poly([k * c for k, c in enumerate(p.coeffs)][1:])


def poly_eval(p: Poly, x: RationalLike) -> Fraction:
    """Evaluate by Horner's rule; exact."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def taylor_shift(p: Poly, shift: RationalLike) -> Poly:
    """The polynomial q with q(t) = p(t + shift)."""
    s = Fraction(shift)
    out: list[Fraction] = []
    for c in reversed(p.coeffs):
        # out <- out*(t+s) + c
        nxt = [Fraction(0)] * (len(out) + 1)
        for k, v in enumerate(out):
            nxt[k] += s * v
            nxt[k + 1] += v
        nxt[0] += c
        out = nxt
    return Poly(out)


def poly_to_strings(p: Poly) -> list[str]:
    """Coefficients low to high as "p/q" strings (degree -1 gives [])."""
    return [format_rational(c) for c in p.coeffs]


def poly_from_strings(coeffs: Iterable[str]) -> Poly:
    return Poly([parse_rational(c) for c in coeffs])


class FormalPowerSeries:
    """Power series truncated at an explicit order.

    coeffs always has length order+1; trailing zeros are significant (they
    record that those coefficients are known to vanish). Binary operations
    truncate to the smaller operand's order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("need coefficients or an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        del cs[order + 1:]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "FormalPowerSeries":
        return cls([value], order)

    @classmethod
    def identity(cls, order: int) -> "FormalPowerSeries":
        """The series x."""
        if order < 1:
            raise ValueError("identity needs order >= 1")
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def truncate(self, order: int) -> "FormalPowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return FormalPowerSeries(self.coeffs, order)

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalPowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "FormalPowerSeries":
        return FormalPowerSeries([-c for c in self.coeffs], self.order)

    def __add__(self, other) -> "FormalPowerSeries":
        if isinstance(other, FormalPowerSeries):
            n = min(self.order, other.order)
            return FormalPowerSeries(
                [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)
        if isinstance(other, (int, Fraction)):
            out = list(self.coeffs)
            out[0] += other
            return FormalPowerSeries(out, self.order)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "FormalPowerSeries":
        if isinstance(other, (FormalPowerSeries, int, Fraction)):
            return self + (-other if isinstance(other, FormalPowerSeries) else -Fraction(other))
        return NotImplemented

    def __rsub__(self, other) -> "FormalPowerSeries":
        return (-self) + other

    def __mul__(self, other) -> "FormalPowerSeries":
        if isinstance(other, FormalPowerSeries):
            n = min(self.order, other.order)
            out = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                a = self.coeffs[i]
                if a:
                    for j in range(n + 1 - i):
                        b = other.coeffs[j]
                        if b:
                            out[i + j] += a * b
            return FormalPowerSeries(out, n)
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            return FormalPowerSeries([s * c for c in self.coeffs], self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FormalPowerSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = FormalPowerSeries.constant(1, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self) -> str:
        return f"FormalPowerSeries({[str(c) for c in self.coeffs]})"


def fps_diff(f: FormalPowerSeries) -> FormalPowerSeries:
    """Formal derivative; the order drops by one."""
    if f.order < 1:
        raise ValueError("cannot differentiate an order-0 truncation")
    return FormalPowerSeries(
        [k * f.coeffs[k] for k in range(1, f.order + 1)], f.order - 1)


def fps_compose(outer: FormalPowerSeries, inner: FormalPowerSeries) -> FormalPowerSeries:
    """outer(inner(x)); inner must have zero constant term."""
    if inner[0] != 0:
        raise ValueError("composition needs a zero inner constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = FormalPowerSeries.constant(outer.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        acc = acc * inner + outer.coeffs[k]
    return acc


def fps_recip(f: FormalPowerSeries) -> FormalPowerSeries:
    """Multiplicative inverse; needs a nonzero constant term."""
    if f[0] == 0:
        raise ValueError("reciprocal needs a nonzero constant term")
    n = f.order
    inv0 = 1 / f.coeffs[0]
    out = [inv0] + [Fraction(0)] * n
    for m in range(1, n + 1):
        out[m] = -inv0 * sum(f.coeffs[k] * out[m - k] for k in range(1, m + 1))
    return FormalPowerSeries(out, n)


def fps_exp(f: FormalPowerSeries) -> FormalPowerSeries:
    """exp(f) for f with zero constant term, via e' = f' e:
    m e_m = sum_{k=1..m} k f_k e_{m-k}."""
    if f[0] != 0:
        raise ValueError("exp needs a zero constant term")
    n = f.order
    out = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        out[m] = sum(k * f.coeffs[k] * out[m - k] for k in range(1, m + 1)) / m
    return FormalPowerSeries(out, n)


def fps_sqrt(f: FormalPowerSeries) -> FormalPowerSeries:
    """Square root with constant term 1: s_m = (f_m - sum s_i s_{m-i})/2."""
    if f[0] != 1:
        raise ValueError("sqrt needs constant term 1")
    n = f.order
    out = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        cross = sum(out[i] * out[m - i] for i in range(1, m))
        out[m] = (f.coeffs[m] - cross) / 2
    return FormalPowerSeries(out, n)


def fps_reverse(g: FormalPowerSeries) -> FormalPowerSeries:
    """Compositional inverse of g with g(0) = 0, g'(0) != 0.

    Lagrange inversion: k [x^k] f = [x^{k-1}] (x/g)^k.
    """
    if g.order < 1 or g[0] != 0:
        raise ValueError("reversion needs a zero constant term")
    if g[1] == 0:
        raise ValueError("reversion needs a nonzero linear coefficient")
    n = g.order
    over_x = FormalPowerSeries(g.coeffs[1:], n - 1)  # g(x)/x
    r = fps_recip(over_x)
    out = [Fraction(0)] * (n + 1)
    out[1] = r[0]
    power = r
    for k in range(2, n + 1):
        power = power * r
        out[k] = power[k - 1] / k
    return FormalPowerSeries(out, n)
