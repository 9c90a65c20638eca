import math

import pytest

from deltapoly.quadrature import (
    QuadratureConfig,
    QuadratureError,
    integrate_half_line,
    integrate_interval,
)


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=1e-17)
    with pytest.raises(ValueError):
        QuadratureConfig(max_levels=0)


def test_half_line_exponential():
    r = integrate_half_line(lambda u: math.exp(-u))
    assert abs(r.value - 1.0) < 1e-12
    assert r.error < 1e-9


def test_half_line_gaussian():
    r = integrate_half_line(lambda u: math.exp(-u * u))
    assert abs(r.value - 0.5 * math.sqrt(math.pi)) < 1e-12


def test_half_line_sqrt_singularity():
    # u^(-1/2) e^(-u) integrates to Gamma(1/2); needs the u = v^2 map
    f = lambda u: math.exp(-u) / math.sqrt(u)
    r = integrate_half_line(f, sqrt_substitution=True)
    assert abs(r.value - math.sqrt(math.pi)) < 1e-12


def test_interval_smooth():
    r = integrate_interval(math.sin, 0.0, 2.0)
    assert abs(r.value - (1.0 - math.cos(2.0))) < 1e-12


def test_interval_endpoint_singularity():
    r = integrate_interval(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0)
    assert abs(r.value - 2.0) < 1e-11


def test_interval_log_singularity():
    r = integrate_interval(lambda x: math.log(1.0 / x), 0.0, 1.0)
    assert abs(r.value - 1.0) < 1e-11


def test_complex_integrand():
    r = integrate_half_line(lambda u: complex(math.cos(u), math.sin(u)) * math.exp(-u))
    assert abs(r.value - complex(0.5, 0.5)) < 1e-11


def test_interval_rejects_empty():
    with pytest.raises(ValueError):
        integrate_interval(math.sin, 1.0, 1.0)


def test_nonconvergence_carries_estimate():
    cfg = QuadratureConfig(rel_tol=1e-10, max_levels=1)
    with pytest.raises(QuadratureError) as info:
        integrate_interval(lambda x: math.sin(40.0 * x) ** 2, 0.0, 3.0, cfg)
    assert math.isfinite(info.value.value)
    assert info.value.error > 0.0
