import random
from fractions import Fraction

import pytest

from deltapoly.series import (
    FormalPowerSeries,
    Poly,
    format_rational,
    fps_compose,
    fps_diff,
    fps_exp,
    fps_recip,
    fps_reverse,
    fps_sqrt,
    parse_rational,
    poly_diff,
    poly_eval,
    poly_from_strings,
    poly_to_strings,
    taylor_shift,
)

F = Fraction


def test_rational_wire_format():
    assert format_rational(F(3, 4)) == "3/4"
    assert format_rational(F(-7)) == "-7"
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-7") == F(-7)
    assert parse_rational(format_rational(F(22, -8))) == F(-11, 4)


def test_poly_normalization():
    assert Poly([1, 2, 0, 0]).coeffs == (F(1), F(2))
    assert Poly([0, 0]).degree == -1
    assert not Poly()
    assert Poly.monomial(3).coeffs == (0, 0, 0, 1)


@pytest.mark.parametrize("coeffs,expected", [
    ([1], []),                     # constant -> 0
    ([0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 5]),   # t^5 -> 5 t^4
    ([0, 2, 0, 1], [2, 0, 3]),     # t^3 + 2t -> 3t^2 + 2
])
def test_poly_diff(coeffs, expected):
    assert poly_diff(Poly(coeffs)) == Poly(expected)


def test_poly_eval():
    assert poly_eval(Poly([0, 1, 1]), 1) == 2          # t^2 + t at 1
    assert poly_eval(Poly([5]), F(9, 7)) == 5
    assert poly_eval(Poly([0, 3, 3, 1]), 1) == 7       # t^3 + 3t^2 + 3t at 1
    assert poly_eval(Poly(), 4) == 0


def test_taylor_shift():
    assert taylor_shift(Poly([0, 0, 1]), 1) == Poly([1, 2, 1])
    p = Poly([3, F(1, 2), 0, 2])
    assert taylor_shift(p, 0) == p
    assert taylor_shift(taylor_shift(p, -1), 1) == p


def test_taylor_shift_matches_eval():
    rng = random.Random(5)
    for _ in range(20):
        p = Poly([F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(0, 7))])
        s = F(rng.randint(-4, 4), rng.randint(1, 4))
        x = F(rng.randint(-4, 4), rng.randint(1, 4))
        assert poly_eval(taylor_shift(p, s), x) == poly_eval(p, x + s)


def test_poly_string_round_trip():
    p = Poly([0, F(3, 2), -1])
    assert poly_to_strings(p) == ["0", "3/2", "-1"]
    assert poly_from_strings(poly_to_strings(p)) == p


def test_fps_truncation_rules():
    f = FormalPowerSeries([1, 2, 3], 5)
    assert f.order == 5
    assert f.coeffs == (1, 2, 3, 0, 0, 0)
    g = FormalPowerSeries([1, 1], 2)
    assert (f + g).order == 2
    assert (f * g).order == 2
    assert f.truncate(2).coeffs == (1, 2, 3)
    with pytest.raises(ValueError):
        f.truncate(9)


def test_fps_pow():
    x = FormalPowerSeries.identity(6)
    one_plus = 1 + x
    assert (one_plus ** 4).coeffs == (1, 4, 6, 4, 1, 0, 0)
    assert (x ** 0) == FormalPowerSeries.constant(1, 6)


def test_compose_identity_outer():
    inner = FormalPowerSeries([0, 2, -1, 5], 6)
    x = FormalPowerSeries.identity(6)
    assert fps_compose(x, inner) == inner


def test_compose_square():
    inner = FormalPowerSeries([0, 1, 1], 4)
    outer = FormalPowerSeries([0, 0, 1], 4)
    assert fps_compose(outer, inner).coeffs == (0, 0, 1, 2, 1)


def test_compose_rejects_constant_inner():
    with pytest.raises(ValueError):
        fps_compose(FormalPowerSeries.identity(3), FormalPowerSeries([1, 1], 3))


def test_reverse_linear():
    assert fps_reverse(FormalPowerSeries.identity(5)) == FormalPowerSeries.identity(5)
    assert fps_reverse(FormalPowerSeries([0, 2], 5)).coeffs == (0, F(1, 2), 0, 0, 0, 0)


def test_reverse_double_factorial():
    # inverse of x - x^2/2 has coefficients (2n-3)!!/n!
    g = FormalPowerSeries([0, 1, F(-1, 2)], 10)
    f = fps_reverse(g)
    dfact = 1
    fact = 1
    assert f[1] == 1
    for n in range(2, 11):
        fact *= n
        assert f[n] == F(dfact, fact)
        dfact *= 2 * n - 1


def test_reverse_round_trip():
    rng = random.Random(11)
    x = FormalPowerSeries.identity(20)
    for _ in range(5):
        coeffs = [0, F(rng.choice([1, 2, 3, -1, -2]))]
        coeffs += [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(19)]
        g = FormalPowerSeries(coeffs, 20)
        f = fps_reverse(g)
        assert fps_compose(g, f) == x
        assert fps_compose(f, g) == x


def test_reverse_rejects_bad_input():
    with pytest.raises(ValueError):
        fps_reverse(FormalPowerSeries([1, 1], 4))
    with pytest.raises(ValueError):
        fps_reverse(FormalPowerSeries([0, 0, 1], 4))


def test_exp():
    zero = FormalPowerSeries.constant(0, 6)
    assert fps_exp(zero) == FormalPowerSeries.constant(1, 6)
    e = fps_exp(FormalPowerSeries.identity(6))
    fact = 1
    for n in range(7):
        fact = fact * n if n else 1
        assert e[n] == F(1, fact)
    with pytest.raises(ValueError):
        fps_exp(FormalPowerSeries([1], 3))


def test_sqrt():
    assert fps_sqrt(FormalPowerSeries.constant(1, 4)) == FormalPowerSeries.constant(1, 4)
    s = fps_sqrt(FormalPowerSeries([1, -4], 5))
    assert s.coeffs[:4] == (1, -2, -2, -4)
    assert s * s == FormalPowerSeries([1, -4], 5)
    with pytest.raises(ValueError):
        fps_sqrt(FormalPowerSeries([4, 1], 3))


def test_recip():
    r = fps_recip(FormalPowerSeries([1, -1], 6))
    assert r.coeffs == (1, 1, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        fps_recip(FormalPowerSeries([0, 1], 3))


def test_sqrt_recip_random_round_trips():
    rng = random.Random(17)
    for _ in range(5):
        coeffs = [1] + [F(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(12)]
        f = FormalPowerSeries(coeffs, 12)
        s = fps_sqrt(f)
        assert s * s == f
        assert f * fps_recip(f) == FormalPowerSeries.constant(1, 12)


def test_diff():
    f = FormalPowerSeries([3, 1, 5, 7], 3)
    assert fps_diff(f).coeffs == (1, 10, 21)
    with pytest.raises(ValueError):
        fps_diff(FormalPowerSeries([1], 0))
