"""The inverse-Gaussian distribution family and its verification checks.

Densities on (0, inf):

    InverseGaussian(t):  t exp(-(u-t)^2 / (2u)) / sqrt(2 pi u^3)
    GammaHalf(t):        exp(-u / (2t)) / sqrt(2 pi t u)     (shape 1/2, scale 2t)
    BesselMeasure(t):    exp(-(u-1)^2 / (2tu)) / sqrt(2 pi t u)
    Dilated(base, c):    the law of c*X for X distributed as base

InverseGaussian(t) has characteristic function exp(t - t sqrt(1 - 2ix))
and forms a convolution semigroup in t; its n-th moment is w_n(t), the
degree-n basic polynomial of D - D**2/2. BesselMeasure(t) has n-th
moment y_n(t), the Bessel polynomial, and factors as the convolution of
GammaHalf(t) with Dilated(InverseGaussian(1/t), t), which exhibits its
infinite divisibility. The exponent 1 - sqrt(1-2ix) itself has the
Kolmogorov representation

    1 - sqrt(1-2ix) = ix + integral_0^inf (e^{iux} - 1 - iux)
                              e^{-u/2} / sqrt(2 pi u^3) du.

All numerical verification runs through the double-exponential rules in
`quadrature`; every check returns Report rows carrying both side values,
absolute and relative deviation, and the quadrature error estimate.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Sequence, Union

from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadResult,
    integrate_half_line,
    integrate_interval,
)

_LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class InverseGaussian:
    t: float

    def __post_init__(self):
        if not self.t > 0:
            raise ValueError("t must be positive")


@dataclass(frozen=True)
class GammaHalf:
    t: float

    def __post_init__(self):
        if not self.t > 0:
            raise ValueError("t must be positive")


@dataclass(frozen=True)
class BesselMeasure:
    t: float

    def __post_init__(self):
        if not self.t > 0:
            raise ValueError("t must be positive")


@dataclass(frozen=True)
class Dilated:
    base: "DistSpec"
    factor: float

    def __post_init__(self):
        if not self.factor > 0:
            raise ValueError("factor must be positive")


DistSpec = Union[InverseGaussian, GammaHalf, BesselMeasure, Dilated]


def density(dist: DistSpec, u: float) -> float:
    """Density at u; identically 0 for u <= 0.

    Evaluated as exp(log density) so the u -> 0 and u -> inf tails
    underflow to 0.0 instead of tripping 0 * inf.
    """
    if u <= 0.0:
        return 0.0
    match dist:
        case InverseGaussian(t):
            d = u - t
            return math.exp(math.log(t) - d * d / (2.0 * u)
                            - 1.5 * math.log(u) - 0.5 * _LOG_2PI)
        case GammaHalf(t):
            return math.exp(-u / (2.0 * t)
                            - 0.5 * (_LOG_2PI + math.log(t) + math.log(u)))
        case BesselMeasure(t):
            d = u - 1.0
            return math.exp(-d * d / (2.0 * t * u)
                            - 0.5 * (_LOG_2PI + math.log(t) + math.log(u)))
        case Dilated(base, c):
            return density(base, u / c) / c
    raise TypeError(f"not a distribution spec: {dist!r}")


def char_fun(dist: DistSpec, x: float) -> complex:
    """E[exp(ixU)] in closed form; principal square root throughout."""
    match dist:
        case InverseGaussian(t):
            return cmath.exp(t - t * cmath.sqrt(1.0 - 2.0j * x))
        case GammaHalf(t):
            return 1.0 / cmath.sqrt(1.0 - 2.0j * t * x)
        case BesselMeasure(t):
            return char_fun(GammaHalf(t), x) * char_fun(Dilated(InverseGaussian(1.0 / t), t), x)
        case Dilated(base, c):
            return char_fun(base, c * x)
    raise TypeError(f"not a distribution spec: {dist!r}")


def _innermost(dist: DistSpec) -> DistSpec:
    while isinstance(dist, Dilated):
        dist = dist.base
    return dist


def moment_quadrature(dist: DistSpec, n: int,
                      cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadResult:
    """n-th moment with its quadrature error estimate.

    GammaHalf densities carry a u**(-1/2) factor at the origin, so they
    get the u = v**2 substitution.
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def integrand(u: float) -> float:
        d = density(dist, u)
        # skip u**n when the density tail already underflowed; u**n alone
        # can overflow at the rule's most extreme nodes
        return 0.0 if d == 0.0 else u**n * d

    return integrate_half_line(
        integrand, cfg,
        sqrt_substitution=isinstance(_innermost(dist), GammaHalf))


def moment(dist: DistSpec, n: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """n-th moment by double-exponential quadrature."""
    return moment_quadrature(dist, n, cfg).value


def char_fun_quadrature(dist: DistSpec, x: float,
                        cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadResult:
    """E[exp(ixU)] by direct integration, as an oracle for char_fun.

    Reliable for moderate |x|, where the density decay dominates the
    oscillation.
    """

    def integrand(u: float) -> complex:
        d = density(dist, u)
        return 0.0 if d == 0.0 else cmath.exp(1j * x * u) * d

    return integrate_half_line(
        integrand, cfg,
        sqrt_substitution=isinstance(_innermost(dist), GammaHalf))


@dataclass(frozen=True)
class Report:
    """One verified equality: both side values, deviations, and the error
    estimate of whatever quadrature produced a side (0.0 if none did)."""

    label: str
    value_lhs: "complex | float"
    value_rhs: "complex | float"
    abs_dev: float
    rel_dev: float
    quad_error: float


def make_report(label: str, lhs, rhs, quad_error: float = 0.0) -> Report:
    dev = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    return Report(label, lhs, rhs, dev, dev / scale if scale else 0.0, quad_error)


def semigroup_check(s: float, t: float, points: Sequence[float],
                    cfg: QuadratureConfig = DEFAULT_CONFIG) -> list[Report]:
    """Convolution semigroup: (rho_s * rho_t)(u) = rho_{s+t}(u), the left
    side by numerical convolution over (0, u). Points u <= 0 compare the
    trivial 0 = 0."""
    if not (s > 0 and t > 0):
        raise ValueError("s and t must be positive")
    rho_s, rho_t = InverseGaussian(s), InverseGaussian(t)
    rho_sum = InverseGaussian(s + t)
    out = []
    for u in points:
        if u <= 0.0:
            out.append(make_report(f"u={u:g}", 0.0, 0.0))
            continue
        conv = integrate_interval(
            lambda v, u=u: density(rho_s, v) * density(rho_t, u - v), 0.0, u, cfg)
        out.append(make_report(f"u={u:g}", conv.value, density(rho_sum, u), conv.error))
    return out


def _cis_ratio(w: float) -> complex:
    """(exp(iw) - 1 - iw) / w**2, stable near w = 0.

    The direct expression loses everything to cancellation for small w;
    the series sum_{k>=2} i^k w^{k-2} / k! starts at -1/2 and converges
    in a few terms for |w| < 1/2.
    """
    if abs(w) >= 0.5:
        return (cmath.exp(1j * w) - 1.0 - 1j * w) / (w * w)
    total = 0j
    term = complex(-0.5)
    k = 2
    while abs(term) > 1e-20:
        total += term
        k += 1
        term *= 1j * w / k
    return total


def kolmogorov_check(x: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> list[Report]:
    """1 - sqrt(1-2ix) = ix + integral (e^{iux} - 1 - iux) e^{-u/2}/sqrt(2 pi u^3) du,
    real and imaginary parts integrated separately, plus the normalization
    integral sqrt(u) e^{-u/2} / sqrt(2 pi) du = 1.

    The integrand is rearranged as x^2 * cis_ratio(ux) * sqrt(u) e^{-u/2},
    which stays finite at both ends of the half line.
    """
    lhs = 1.0 - cmath.sqrt(1.0 - 2.0j * x)
    x2 = x * x

    def part(u: float, pick_real: bool) -> float:
        if x2 == 0.0:
            return 0.0
        z = _cis_ratio(u * x)
        w = x2 * math.exp(0.5 * math.log(u) - 0.5 * u - 0.5 * _LOG_2PI)
        return (z.real if pick_real else z.imag) * w

    re = integrate_half_line(lambda u: part(u, True), cfg)
    im = integrate_half_line(lambda u: part(u, False), cfg)
    rhs = complex(re.value, x + im.value)
    reports = [make_report(f"identity x={x:g}", lhs, rhs, max(re.error, im.error))]

    norm = integrate_half_line(
        lambda u: math.exp(0.5 * math.log(u) - 0.5 * u - 0.5 * _LOG_2PI), cfg)
    reports.append(make_report("normalization", 1.0, norm.value, norm.error))
    return reports


def convolution_factorization_check(t: float, x_points: Sequence[float],
                                    u_points: Sequence[float] = (0.5, 1.0, 2.0),
                                    cfg: QuadratureConfig = DEFAULT_CONFIG) -> list[Report]:
    """BesselMeasure(t) = GammaHalf(t) convolved with Dilated(InverseGaussian(1/t), t).

    At each x the closed characteristic functions are compared:
    exp((1 - sqrt(1-2itx))/t) / sqrt(1-2itx) against the factor product.
    At each positive u the densities are compared, left side by numerical
    convolution.
    """
    if not t > 0:
        raise ValueError("t must be positive")
    gamma_part = GammaHalf(t)
    dilated_part = Dilated(InverseGaussian(1.0 / t), t)
    out = []
    for x in x_points:
        root = cmath.sqrt(1.0 - 2.0j * t * x)
        psi = cmath.exp((1.0 - root) / t) / root
        product = char_fun(gamma_part, x) * char_fun(dilated_part, x)
        out.append(make_report(f"char x={x:g}", psi, product))
    target = BesselMeasure(t)
    for u in u_points:
        if u <= 0.0:
            out.append(make_report(f"density u={u:g}", 0.0, 0.0))
            continue
        conv = integrate_interval(
            lambda v, u=u: density(gamma_part, v) * density(dilated_part, u - v),
            0.0, u, cfg)
        out.append(make_report(f"density u={u:g}", conv.value, density(target, u), conv.error))
    return out


def bessel_k_half(m: int, z: float) -> float:
    """Modified Bessel function K of half-integer order m + 1/2 at z > 0.

    Seeded by K_{1/2}(z) = sqrt(pi/(2z)) e^{-z} and lifted with the
    upward recurrence K_{v+1} = K_{v-1} + (2v/z) K_v, which is stable for
    K (it is the dominant solution in that direction). Negative orders
    come free from K_{-v} = K_v.
    """
    if not z > 0:
        raise ValueError("z must be positive")
    if m < 0:
        m = -m - 1  # K_{m+1/2} with m < 0 equals K_{(-m-1)+1/2}
    k_half = math.sqrt(math.pi / (2.0 * z)) * math.exp(-z)
    prev, cur = k_half, k_half  # K_{-1/2}, K_{1/2}
    for i in range(1, m + 1):
        prev, cur = cur, prev + ((2 * i - 1) / z) * cur
    return cur


def bessel_k_quadrature(m: int, z: float,
                        cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadResult:
    """K_{m+1/2}(z) for m >= 0 from the integral representation
    K_p(z) = (1/2) (z/2)^p integral_0^inf exp(-v - z^2/(4v)) v^{-p-1} dv
    (DLMF 10.32.10), as an oracle independent of the recurrence."""
    if m < 0:
        raise ValueError("m must be >= 0 here; use symmetry first")
    if not z > 0:
        raise ValueError("z must be positive")
    p = m + 0.5
    c = 0.25 * z * z

    def integrand(v: float) -> float:
        return math.exp(-v - c / v - (p + 1.0) * math.log(v))

    r = integrate_half_line(integrand, cfg)
    scale = 0.5 * (0.5 * z) ** p
    return QuadResult(scale * r.value, scale * r.error)


def ig_sample(t: float, seed: int, count: int) -> list[float]:
    """Inverse-Gaussian draws (mean t, shape t^2), deterministic per seed.

    Transform-with-multiple-roots method of Michael, Schucany and Haas,
    "Generating random variates using transformations with multiple
    roots", The American Statistician 30 (1976) 88-90: solve the inverse
    of the chi-square transform y = t(u-t)^2/(t^2 u) and pick the root
    with the right probability.
    """
    if not t > 0:
        raise ValueError("t must be positive")
    if count < 0:
        raise ValueError("count must be >= 0")
    rng = random.Random(seed)
    mu = t
    lam = t * t
    out = []
    for _ in range(count):
        nu = rng.gauss(0.0, 1.0)
        y = nu * nu
        x = mu + mu * mu * y / (2.0 * lam) \
            - (mu / (2.0 * lam)) * math.sqrt(4.0 * mu * lam * y + mu * mu * y * y)
        if rng.random() * (mu + x) <= mu:
            out.append(x)
        else:
            out.append(mu * mu / x)
    return out
