import math
from fractions import Fraction

import pytest

from deltapoly.bessel import (
    bessel_egf_check,
    bessel_poly,
    carlitz_w,
    w_bessel_relation_check,
)
from deltapoly.delta import AbTriple, basic_sequence_closed
from deltapoly.series import (
    FormalPowerSeries,
    Poly,
    fps_diff,
    fps_exp,
    fps_recip,
    fps_sqrt,
    poly_eval,
)

F = Fraction


def test_bessel_poly_small():
    ys = bessel_poly(3)
    assert ys[0] == Poly([1])
    assert ys[1] == Poly([1, 1])
    assert ys[2] == Poly([1, 3, 3])
    assert ys[3] == Poly([1, 6, 15, 15])


def test_bessel_poly_values_at_one():
    ys = bessel_poly(5)
    assert [poly_eval(y, 1) for y in ys] == [1, 2, 7, 37, 266, 2431]


def test_bessel_poly_leading_and_constant():
    ys = bessel_poly(9)
    for n, y in enumerate(ys):
        assert y.coeffs[0] == 1
        # leading coefficient (2n)! / (n! 2^n)
        assert y.coeffs[n] == F(math.factorial(2 * n), math.factorial(n) * 2**n)


def test_carlitz_w_matches_ab_closed_form():
    ws = carlitz_w(12)
    other = basic_sequence_closed(AbTriple(1, F(1, 2), 1), 12)
    assert ws.polys == other.polys
    assert ws[2] == Poly([0, 1, 1])
    assert [poly_eval(w, 2) for w in ws][:5] == [1, 2, 6, 26, 154]


def test_relation_w_equals_reversed_bessel():
    assert w_bessel_relation_check(1)
    assert w_bessel_relation_check(25)
    # the n = 3 instance by hand: w_3(t) = t^3 y_2(1/t)
    ws = carlitz_w(3)
    assert poly_eval(ws[3], 1) == poly_eval(bessel_poly(2)[2], 1)


def test_relation_inverse_direction():
    # y_n(t) = t^{n+1} w_{n+1}(1/t) at a rational point
    ws = carlitz_w(7)
    ys = bessel_poly(6)
    t0 = F(2, 3)
    for n in range(7):
        assert poly_eval(ys[n], t0) == t0 ** (n + 1) * poly_eval(ws[n + 1], 1 / t0)


@pytest.mark.parametrize("t0", [1, 2, F(1, 2), F(2, 3), -1])
def test_egf(t0):
    assert bessel_egf_check(t0, 12)


def test_egf_rejects_zero():
    with pytest.raises(ValueError):
        bessel_egf_check(0, 8)


def test_egf_derivative_identity():
    # sum y_n(t0) x^n/n! = d/dx exp((1 - sqrt(1-2 t0 x))/t0)
    order = 10
    t0 = F(3, 5)
    ys = bessel_poly(order)
    lhs = FormalPowerSeries(
        [poly_eval(ys[n], t0) / math.factorial(n) for n in range(order + 1)], order)
    root = fps_sqrt(FormalPowerSeries([1, -2 * t0], order + 1))
    rhs = fps_diff(fps_exp((1 - root) * (1 / t0)))
    assert lhs.truncate(order) == rhs.truncate(order)


def test_egf_right_side_shape():
    # the EGF's own two factors: exp part has constant 1, recip(sqrt) too
    t0 = F(1, 2)
    root = fps_sqrt(FormalPowerSeries([1, -2 * t0], 8))
    assert fps_exp((1 - root) * (1 / t0))[0] == 1
    assert fps_recip(root)[0] == 1
