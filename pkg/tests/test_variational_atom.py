import itertools
import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaprod import variational_atom as va
from gammaprod.errors import DomainError

mp.mp.dps = 30


def mp_expectation(alpha, b, ell, N):
    # <H> from the radial integrals evaluated in closed form with mpmath
    alpha, b = mp.mpf(alpha), mp.mpf(b)
    n = 2 * ell + N
    s = 2 * alpha

    def moment(p):  # ∫ r^p e^(-s r^b) dr
        return mp.gamma((p + 1) / b) / (b * s ** ((p + 1) / b))

    norm = moment(n - 1)
    inv_r = moment(n - 2)
    # R'² r^(N-1) + centrifugal, expanded
    kin = (ell**2 + ell * (ell + N - 2)) * moment(n - 3) - 2 * ell * alpha * b * moment(n - 3 + b) \
        + (alpha * b) ** 2 * moment(n - 3 + 2 * b)
    return float(kin / (2 * norm) - inv_r / norm)


def test_hydrogen_ground_state_exact_at_b1():
    e, alpha = va.min_energy_analytic(1.0, 0)
    assert e == pytest.approx(-0.5, rel=1e-14)
    assert alpha == pytest.approx(1.0, rel=1e-14)


def test_gaussian_trial():
    e, _ = va.min_energy_analytic(2.0, 0)
    assert e == pytest.approx(-4 / (3 * math.pi), rel=1e-14)


@pytest.mark.parametrize("alpha,b,ell,N", [(0.7, 1.0, 0, 3), (0.3, 2.0, 1, 3), (1.5, 0.5, 2, 4), (4.0, 6.0, 5, 7)])
def test_closed_form_matches_mpmath_moments(alpha, b, ell, N):
    assert va.expectation_H(va.TrialParams(alpha, b, ell, N)) == pytest.approx(mp_expectation(alpha, b, ell, N), rel=1e-12)


def test_closed_form_matches_quadrature_on_grid():
    for alpha, b, ell in itertools.product((0.05, 0.7, 4.0), (0.5, 1.0, 2.0, 6.0), (0, 1, 5)):
        p = va.TrialParams(alpha, b, ell, 3)
        closed = va.expectation_H(p)
        quad = va.expectation_H_quadrature(p, tol=1e-8)
        assert abs(quad.value / closed - 1) < 1e-8


def test_quadrature_in_higher_dimensions():
    for N in (4, 5, 9):
        p = va.TrialParams(0.6, 1.7, 2, N)
        assert va.expectation_H_quadrature(p, tol=1e-9).value == pytest.approx(va.expectation_H(p), rel=1e-9)


def test_radial_moment():
    ev = va.radial_moment(2.0, 0.8, 1.5, tol=1e-11)
    exact = math.gamma(3 / 1.5) / (1.5 * 1.6 ** (3 / 1.5))
    assert abs(ev.value - exact) < 1e-10 * exact
    with pytest.raises(DomainError):
        va.radial_moment(-1.0, 1.0, 1.0)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.3, max_value=8.0), st.integers(min_value=0, max_value=30), st.sampled_from([3, 4, 5, 9]))
def test_numeric_minimum_matches_analytic(b, ell, N):
    e_an, a_an = va.min_energy_analytic(b, ell, N)
    e_num, a_num = va.min_energy_numeric(b, ell, N)
    assert abs(e_num / e_an - 1) < 1e-9
    assert e_num >= e_an * (1 + 1e-15)  # never below the analytic minimum
    assert abs(math.log(a_num / a_an)) < 1e-4


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.2, max_value=10.0), st.integers(min_value=0, max_value=40), st.sampled_from([3, 4, 6]))
def test_variational_bound(b, ell, N):
    e_an, _ = va.min_energy_analytic(b, ell, N)
    exact = va.exact_energy(va.ExactLevel(0, ell, N))
    assert e_an >= exact * (1 + 1e-14)


@pytest.mark.parametrize("N", [3, 4, 5, 9])
def test_exact_at_b1_all_ell(N):
    for ell in range(21):
        e_an, _ = va.min_energy_analytic(1.0, ell, N)
        assert e_an == pytest.approx(-1 / (2 * (ell + (N - 1) / 2) ** 2), rel=1e-12)


def test_exact_spectrum():
    assert va.exact_energy(va.ExactLevel(0, 0, 3)) == -0.5
    assert va.exact_energy(va.ExactLevel(1, 0, 3)) == -0.125
    assert va.exact_energy(va.ExactLevel(0, 1, 3)) == -0.125
    assert va.exact_energy(va.ExactLevel(0, 0, 4)) == pytest.approx(-2 / 9)


def test_units_scale_energy():
    units = va.UnitSystem(hbar=2.0, mass=3.0, charge=1.5)
    e, _ = va.min_energy_analytic(1.0, 0, units=units)
    assert e == pytest.approx(-0.5 * 3.0 * 1.5**4 / 4.0, rel=1e-14)
    p = va.TrialParams(0.9, 1.3, 1)
    assert va.expectation_H_quadrature(p, units, tol=1e-9).value == pytest.approx(va.expectation_H(p, units), rel=1e-9)


def test_uncertainty():
    assert va.uncertainty_r2(va.TrialParams(1.0, 2.0, 0)) == pytest.approx(math.sqrt(2 / 3), abs=1e-12)
    seq = [va.uncertainty_r2(va.TrialParams(1.0, 2.0, ell)) for ell in range(0, 300)]
    assert all(y < x for x, y in zip(seq, seq[1:]))
    assert va.uncertainty_r2(va.TrialParams(1.0, 2.0, 10**4)) < 0.02
    # independent of alpha, and equal to the moment-based value
    p = va.TrialParams(0.37, 1.3, 3)
    n = 2 * 3 + 3
    m = [va.radial_moment(n - 1 + j, 0.37, 1.3, 1e-12).value for j in (0, 2, 4)]
    assert va.uncertainty_r2(p) == pytest.approx(math.sqrt(m[2] * m[0] / m[1] ** 2 - 1), rel=1e-8)
    assert va.uncertainty_r2(va.TrialParams(5.0, 1.3, 3)) == pytest.approx(va.uncertainty_r2(p), rel=1e-15)


@pytest.mark.parametrize(
    "kwargs",
    [dict(alpha=0.0, b=1.0), dict(alpha=1.0, b=0.0), dict(alpha=1.0, b=1.0, ell=-1), dict(alpha=1.0, b=1.0, ell=0.5),
     dict(alpha=1.0, b=1.0, N=2), dict(alpha=math.nan, b=1.0)],
)
def test_trial_params_validation(kwargs):
    with pytest.raises(DomainError):
        va.TrialParams(**kwargs)


def test_other_validation():
    with pytest.raises(DomainError):
        va.UnitSystem(hbar=0.0)
    with pytest.raises(DomainError):
        va.ExactLevel(n_r=-1)
    with pytest.raises(DomainError):
        va.min_energy_numeric(1.0, 0, tol=1e-15)
