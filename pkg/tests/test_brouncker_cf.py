import math
import random

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaprod import brouncker_cf as bcf
from gammaprod import product_engine as pe
from gammaprod.errors import BudgetExceededError, DomainError

mp.mp.dps = 30

TRIANGLE = (0.5, 1.0, 2.0, 3.0, 5.0, 7.3)


def test_gamma_form_values():
    assert abs(bcf.cf_gamma_form(1) - 4 / math.pi) < 1e-14
    assert bcf.cf_gamma_form(3) == pytest.approx(math.pi, rel=1e-15)
    assert bcf.cf_gamma_form(5) == pytest.approx(16 / math.pi, rel=1e-15)
    for s in (0.5, 7.3, 40.0):
        ref = 4 * (mp.gamma((3 + mp.mpf(s)) / 4) / mp.gamma((1 + mp.mpf(s)) / 4)) ** 2
        assert bcf.cf_gamma_form(s) == pytest.approx(float(ref), rel=1e-14)


def test_fixed_depth():
    assert bcf.cf_eval(bcf.CFSpec(1.0, depth=1)).value == 1.5
    assert bcf.cf_eval(bcf.CFSpec(2.0, depth=1)).value == 2.25
    # depth 2: s + 1/(2s + 9/(2s))
    assert bcf.cf_eval(bcf.CFSpec(1.0, depth=2)).value == pytest.approx(1 + 1 / (2 + 9 / 2))


def test_matches_mpmath_continued_fraction():
    s, d = 1.3, 50
    x = mp.mpf(2 * s)
    for j in range(d - 1, 0, -1):
        x = 2 * s + mp.mpf(2 * j + 1) ** 2 / x
    assert bcf.truncate(s, d) == pytest.approx(float(s + 1 / x), rel=1e-14)


def test_adaptive_s1():
    ev = bcf.cf_eval(bcf.CFSpec(1.0, tol=1e-6))
    assert abs(ev.value - 4 / math.pi) < 1e-6
    plain = bcf.cf_eval(bcf.CFSpec(1.0, tol=1e-6), seeded=False)
    assert abs(plain.value - 4 / math.pi) < 1e-6


@pytest.mark.parametrize("s", TRIANGLE)
def test_oracle_triangle(s):
    g = bcf.cf_gamma_form(s)
    cf = bcf.cf_eval(bcf.CFSpec(s, tol=1e-8))
    prod = bcf.cf_product_form(s, 1e-8)
    assert abs(cf.value - g) < 3e-8
    assert abs(prod.value - g) < 3e-8
    assert abs(cf.value - prod.value) < 3e-8
    assert abs(prod.value - g) <= prod.error_bound


@pytest.mark.parametrize("s", [0.5, 2.0, 7.3])
def test_tail_seed_tracks_true_tail(s):
    # reference tail at level d: recurrence started 10^5 levels deeper
    deep = 100000
    for d in (10, 40, 200):
        x = bcf.tail_seed(s, deep)
        for j in range(deep - 1, d - 1, -1):
            x = 2 * s + (2 * j + 1) ** 2 / x
        assert abs(bcf.tail_seed(s, d) - x) < (s + 1) ** 4 / (8 * d**3)


def test_functional_equation():
    rng = random.Random(11)
    for s in [rng.uniform(1, 50) for _ in range(20)] + [1.0, 2.0, 7.3]:
        assert abs(bcf.functional_equation_check(s) - 1) < 1e-12
    with pytest.raises(DomainError):
        bcf.functional_equation_check(0.5)


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=1.0, max_value=200.0))
def test_functional_equation_property(s):
    assert abs(bcf.functional_equation_check(s) - 1) < 1e-12


@pytest.mark.parametrize("d", [10, 100, 1000])
def test_even_odd_bracketing(d):
    limit = bcf.cf_gamma_form(1.0)
    a = bcf.cf_eval(bcf.CFSpec(1.0, depth=d)).value
    b = bcf.cf_eval(bcf.CFSpec(1.0, depth=d + 1)).value
    assert min(a, b) < limit < max(a, b)


def test_wallis_bridge():
    wallis = pe.evaluate(pe.ProductFamily(2.0, 0.0), 1e-10)
    assert abs(wallis.value - 2 / bcf.cf_gamma_form(1.0)) < 1e-9
    f = bcf.bridge_family(1.0)
    assert (f.b, f.a) == (2.0, 0.0)
    for s in (0.5, 3.0, 9.0):
        assert (s + 1) / pe.closed_form_target(bcf.bridge_family(s)) == pytest.approx(bcf.cf_gamma_form(s), rel=1e-13)


def test_validation():
    with pytest.raises(DomainError):
        bcf.CFSpec(0.0, depth=3)
    with pytest.raises(DomainError):
        bcf.CFSpec(1.0)
    with pytest.raises(DomainError):
        bcf.CFSpec(1.0, depth=0)
    with pytest.raises(DomainError):
        bcf.cf_gamma_form(-1.0)
    with pytest.raises(BudgetExceededError):
        bcf.cf_eval(bcf.CFSpec(0.5, tol=1e-9), seeded=False, max_depth=1 << 12)
