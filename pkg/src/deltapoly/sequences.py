"""Eight integer sequences arising as moments of the distribution family.

Each sequence has two independent exact constructions (the explicit
closed sums of `bessel`, or the generic triangular solve of `delta`) and
a distribution whose quadrature moments must reproduce it. The OEIS ids
are labels for cross-reference only; all values are computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bessel import bessel_poly, carlitz_w
from .delta import AbTriple, BinomialSequence, DeltaOperator, basic_sequence_generic
from .distributions import (
    BesselMeasure,
    Dilated,
    InverseGaussian,
    Report,
    make_report,
    moment_quadrature,
)
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, QuadResult
from .series import poly_eval


@dataclass(frozen=True)
class SequenceSpec:
    oeis_id: str
    description: str


SPECS: tuple[SequenceSpec, ...] = (
    SequenceSpec("A144301", "w_n(1): moments of the inverse-Gaussian law at t=1"),
    SequenceSpec("A107104", "w_n(2): moments of the inverse-Gaussian law at t=2"),
    SequenceSpec("A043301", "w_{n+1}(2)/2: moments of the size-biased inverse-Gaussian law at t=2"),
    SequenceSpec("A080893", "2^n w_n(1/2): moments of the doubled inverse-Gaussian law at t=1/2"),
    SequenceSpec("A001515", "y_n(1): moments of the Bessel measure at t=1"),
    SequenceSpec("A001517", "y_n(2): moments of the Bessel measure at t=2"),
    SequenceSpec("A001518", "y_n(3): moments of the Bessel measure at t=3"),
    SequenceSpec("A065919", "y_n(4): moments of the Bessel measure at t=4"),
)

SEQUENCE_IDS: tuple[str, ...] = tuple(s.oeis_id for s in SPECS)

_Y_POINT = {"A001515": 1, "A001517": 2, "A001518": 3, "A065919": 4}


def _w_sequence(nmax: int, method: str) -> BinomialSequence:
    if method == "closed":
        return carlitz_w(nmax)
    op = DeltaOperator.from_ab(AbTriple(Fraction(1), Fraction(1, 2), 1), order=max(nmax, 1))
    return basic_sequence_generic(op, nmax)


def _exact_terms(seq_id: str, count: int, method: str) -> list[Fraction]:
    if seq_id in _Y_POINT:
        t0 = Fraction(_Y_POINT[seq_id])
        if method == "closed":
            ys = bessel_poly(count - 1)
            return [poly_eval(ys[n], t0) for n in range(count)]
        # y_n(t) = t^{n+1} w_{n+1}(1/t), with w from the generic solver
        ws = _w_sequence(count, method)
        return [t0 ** (n + 1) * poly_eval(ws[n + 1], 1 / t0) for n in range(count)]
    if seq_id == "A144301":
        ws = _w_sequence(count - 1, method)
        return [poly_eval(ws[n], 1) for n in range(count)]
    if seq_id == "A107104":
        ws = _w_sequence(count - 1, method)
        return [poly_eval(ws[n], 2) for n in range(count)]
    if seq_id == "A043301":
        ws = _w_sequence(count, method)
        return [poly_eval(ws[n + 1], 2) / 2 for n in range(count)]
    if seq_id == "A080893":
        ws = _w_sequence(count - 1, method)
        return [Fraction(2) ** n * poly_eval(ws[n], Fraction(1, 2)) for n in range(count)]
    raise ValueError(f"unknown sequence id {seq_id!r}")


def generate(seq_id: str, count: int, method: str = "closed") -> list[int]:
    """First `count` terms, exactly. Raises if a term fails to be an
    integer, which would mean the construction itself is broken."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if method not in ("closed", "generic"):
        raise ValueError(f"unknown method {method!r}")
    terms = _exact_terms(seq_id, count, method)
    out = []
    for n, v in enumerate(terms):
        if v.denominator != 1:
            raise ArithmeticError(f"{seq_id} term {n} is not an integer: {v}")
        out.append(v.numerator)
    return out


def _moment_for(seq_id: str, n: int, cfg: QuadratureConfig) -> QuadResult:
    if seq_id in _Y_POINT:
        return moment_quadrature(BesselMeasure(float(_Y_POINT[seq_id])), n, cfg)
    if seq_id == "A144301":
        return moment_quadrature(InverseGaussian(1.0), n, cfg)
    if seq_id == "A107104":
        return moment_quadrature(InverseGaussian(2.0), n, cfg)
    if seq_id == "A043301":
        q = moment_quadrature(InverseGaussian(2.0), n + 1, cfg)
        return QuadResult(q.value / 2.0, q.error / 2.0)
    if seq_id == "A080893":
        return moment_quadrature(Dilated(InverseGaussian(0.5), 2.0), n, cfg)
    raise ValueError(f"unknown sequence id {seq_id!r}")


def crosscheck(seq_id: str, count: int,
               cfg: QuadratureConfig = DEFAULT_CONFIG) -> list[Report]:
    """Exact terms against quadrature moments of the matching law."""
    terms = generate(seq_id, count)
    out = []
    for n in range(count):
        q = _moment_for(seq_id, n, cfg)
        out.append(make_report(f"{seq_id} n={n}", float(terms[n]), q.value, q.error))
    return out
