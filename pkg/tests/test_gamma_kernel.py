import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaprod import gamma_kernel as gk
from gammaprod.errors import DomainError, PoleError

mp.mp.dps = 40

SQRT_PI = 1.7724538509055160273


def test_known_values():
    assert gk.log_gamma(0.5) == pytest.approx(0.5723649429247001, rel=1e-15)
    assert gk.log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-15)
    assert gk.log_gamma(1.0) == 0.0
    assert gk.log_gamma(2.0) == 0.0
    assert gk.gamma(0.5) == pytest.approx(SQRT_PI, rel=2e-16)
    assert gk.gamma(4.0) == 6.0
    assert gk.gamma(1.5) == pytest.approx(SQRT_PI / 2, rel=2e-16)


def test_log_gamma_relative_accuracy_against_mpmath():
    zs = np.concatenate([np.geomspace(1e-6, 1e6, 700), np.linspace(0.5, 3.0, 251)])
    worst = 0.0
    for z in zs:
        ref = mp.loggamma(mp.mpf(float(z)))
        if ref == 0:
            continue
        worst = max(worst, abs(float((gk.log_gamma(float(z)) - ref) / ref)))
    assert worst < 1e-13


def test_log_gamma_near_its_zeros_keeps_absolute_accuracy():
    for z in (1.0 + 1e-9, 1.0 - 1e-7, 2.0 + 3e-8, 2.0 - 1e-10):
        ref = float(mp.loggamma(mp.mpf(z)))
        assert abs(gk.log_gamma(z) - ref) <= 1e-13 * abs(ref) + 1e-300


@pytest.mark.parametrize("z", [-0.5, -1.5, -2.25, -7.1, -30.3, 0.3 - 1.0])
def test_negative_arguments_match_mpmath(z):
    assert gk.gamma(z) == pytest.approx(float(mp.gamma(z)), rel=1e-13)
    assert gk.reflect_extend(z) == pytest.approx(float(mp.gamma(z)), rel=1e-13)
    assert gk.gamma_sign(z) == math.copysign(1.0, float(mp.gamma(z)))


@pytest.mark.parametrize("z", [0.0, -1.0, -2.0, -17.0])
def test_poles_raise(z):
    with pytest.raises(PoleError):
        gk.log_gamma(z)
    with pytest.raises(PoleError):
        gk.gamma(z)


@pytest.mark.parametrize("z", [math.nan, math.inf, -math.inf])
def test_non_finite_raise(z):
    with pytest.raises(DomainError):
        gk.log_gamma(z)


def test_overflow():
    assert math.isfinite(gk.gamma(171.6))
    with pytest.raises(OverflowError):
        gk.gamma(172.0)


def test_reflect_extend_domain():
    with pytest.raises(DomainError):
        gk.reflect_extend(0.7)


def test_sinpi_exact_points():
    assert gk.sinpi(3.0) == 0.0
    assert gk.sinpi(-2.0) == 0.0
    assert gk.sinpi(0.5) == 1.0
    assert gk.sinpi(-0.5) == -1.0
    assert gk.sinpi(2.5) == 1.0
    assert gk.sinpi(0.37) == pytest.approx(math.sin(math.pi * 0.37), rel=1e-15)


def test_pochhammer():
    assert gk.pochhammer(3.0, 0) == 1.0
    assert gk.pochhammer(1.0, 5) == 120.0
    assert gk.pochhammer(0.5, 3) == pytest.approx(0.5 * 1.5 * 2.5)
    for y, n in ((0.3, 7), (2.7, 12), (1 / 6, 20)):
        assert gk.pochhammer(y, n) == pytest.approx(float(mp.rf(y, n)), rel=1e-14)
    with pytest.raises(DomainError):
        gk.pochhammer(1.0, -1)


def test_gamma_ratio_and_shift():
    assert gk.gamma_ratio((0.5, 0.5), (1.0,)) == pytest.approx(math.pi, rel=1e-15)
    assert gk.gamma_recursion_shift(0.5, 3) == pytest.approx(0.5 * 1.5 * 2.5, rel=1e-15)
    assert gk.gamma_recursion_shift(-2.5, 4) == pytest.approx(float(mp.gamma(1.5) / mp.gamma(-2.5)), rel=1e-14)
    with pytest.raises(PoleError):
        gk.gamma_recursion_shift(-2.0, 1)
    with pytest.raises(DomainError):
        gk.log_gamma_ratio((-0.5,), ())


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=1e-3, max_value=1e5))
def test_recursion_property(z):
    # ln Γ(z+1) - ln Γ(z) = ln z
    lhs = gk.log_gamma(z + 1.0) - gk.log_gamma(z)
    scale = max(1.0, abs(gk.log_gamma(z)), abs(gk.log_gamma(z + 1.0)))
    assert abs(lhs - math.log(z)) <= 4e-15 * scale + 1e-15


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=0.01, max_value=0.99))
def test_reflection_property(z):
    value = gk.gamma(z) * gk.gamma(1.0 - z) * gk.sinpi(z) / math.pi
    assert abs(value - 1.0) < 1e-13


def test_euler_limit_oracle():
    assert gk.gamma_euler_limit(1.0, 9) == pytest.approx(0.9, rel=1e-15)
    assert gk.gamma_euler_limit(0.5, 10**6) == pytest.approx(SQRT_PI, rel=1e-6)
    assert gk.gamma_euler_limit(-2.5, 10**5) == pytest.approx(float(mp.gamma(-2.5)), rel=1e-4)
    # error decays like 1/m
    e1 = gk.gamma_euler_limit(0.5, 1000) / SQRT_PI - 1
    e2 = gk.gamma_euler_limit(0.5, 10000) / SQRT_PI - 1
    assert 8 < e1 / e2 < 12


@pytest.mark.parametrize("z", [0.1, 0.5, 1.0, 2.5, 7.3, 20.0])
def test_quadrature_oracle(z):
    ev = gk.gamma_integral_quadrature(z, 1e-10)
    exact = float(mp.gamma(z))
    assert abs(ev.value - exact) <= ev.error_bound
    assert ev.error_bound <= 1e-10 * max(1.0, exact)


def test_quadrature_oracle_domain():
    with pytest.raises(DomainError):
        gk.gamma_integral_quadrature(-0.5)
    with pytest.raises(DomainError):
        gk.gamma_integral_quadrature(1.0, tol=1e-16)
