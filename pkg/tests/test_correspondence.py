import math

import mpmath as mp
import pytest

from gammaprod import correspondence as corr
from gammaprod import product_engine as pe
from gammaprod import variational_atom as va
from gammaprod.errors import ConvergenceError, DomainError

mp.mp.dps = 30


def test_ground_ratio():
    assert corr.ratio(0, 2) == pytest.approx(8 / (3 * math.pi), abs=1e-12)
    assert corr.ratio(0, 1) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("ell,b,N", [(0, 2, 3), (3, 4, 3), (7, 0.6, 5), (40, 6, 4)])
def test_ratio_is_energy_quotient(ell, b, N):
    e, _ = va.min_energy_analytic(b, ell, N)
    exact = va.exact_energy(va.ExactLevel(0, ell, N))
    assert corr.ratio(ell, b, N) == pytest.approx(e / exact, rel=1e-13)


def test_ratio_against_mpmath():
    for ell, b in ((5, 2), (100, 6), (10**4, 2)):
        n = 2 * ell + 3
        ref = mp.mpf(n - 1) ** 2 / (b * (n - 2 + b)) * mp.gamma(mp.mpf(n - 1) / b) ** 2 / (
            mp.gamma(mp.mpf(n) / b) * mp.gamma(mp.mpf(n - 2 + b) / b))
        assert corr.ratio(ell, b) == pytest.approx(float(ref), rel=1e-12)


def test_deviation_order_is_one():
    devs = [1 - corr.ratio(ell, 2) for ell in (1000, 2000)]
    assert devs[0] / devs[1] == pytest.approx(2.0, rel=2e-3)


@pytest.mark.parametrize("b,a", [(2, 0), (4, 1), (6, 2), (8, 3)])
def test_richardson_limit(b, a):
    spec = corr.RatioSequenceSpec(b, a, k_max=100)
    seq = corr.ratio_sequence(spec)
    assert abs(corr.extrapolate_limit(seq, spec.abscissae) - 1) < 1e-6
    # far better than the raw last entry
    assert abs(seq[-1] - 1) > 1e-3


def test_extrapolate_exact_on_polynomial_in_h():
    ells = [2.0**i for i in range(6)]
    seq = [3.0 + 2.0 / e - 5.0 / e**2 for e in ells]
    assert corr.extrapolate_limit(seq, ells, levels=2) == pytest.approx(3.0, abs=1e-12)
    assert corr.extrapolate_limit(seq) == pytest.approx(3.0, abs=1e-12)


def test_extrapolate_rejects_non_convergent():
    with pytest.raises(ConvergenceError):
        corr.extrapolate_limit([1.0, 1.1, 1.5, 3.0], [1, 2, 4, 8])
    with pytest.raises(DomainError):
        corr.extrapolate_limit([1.0, 2.0])


@pytest.mark.parametrize("b,a,N", [(2, 0, 3), (4, 1, 3), (6, 2, 3), (8, 0, 5)])
def test_telescoping_identity(b, a, N):
    spec = corr.RatioSequenceSpec(b, a, N, k_max=60)
    f = corr.derive_product_family(spec)
    assert (f.b, f.a, f.N) == (b, a, N)
    for K in (0, 1, 17, 60):
        assert corr.telescoped_ratio(f, K) == pytest.approx(corr.ratio(a + K * b // 2, b, N), rel=1e-12)
        partial = pe.partial_product(f, K).value / pe.closed_form_target(f)
        assert partial == pytest.approx(corr.ratio(a + K * b // 2, b, N), rel=1e-12)


@pytest.mark.parametrize("kwargs", [dict(b=3, a=0), dict(b=4, a=2), dict(b=0, a=0), dict(b=2, a=0, N=2), dict(b=2, a=0, k_max=0)])
def test_spec_validation(kwargs):
    with pytest.raises(DomainError):
        corr.RatioSequenceSpec(**kwargs)


def test_spec_grid():
    spec = corr.RatioSequenceSpec(6, 2, k_max=3)
    assert spec.ells == [2, 5, 8, 11]
    assert spec.abscissae[0] == pytest.approx((2 * 2 + 2) / 6 + 0.5)
