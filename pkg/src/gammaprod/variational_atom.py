"""Variational energies of the hydrogen atom in N dimensions.

Trial states are ``R(r) = r^ell exp(-alpha r^b)`` times an angular factor
whose orthonormality is all that enters. With ``u = (2 alpha)^(1/b)`` and
``n = 2 ell + N`` the energy expectation is the quadratic

    <H> = A u² - B u,
    A = (hbar²/2m) (b (n - 2 + b) / 4) Γ((n - 2 + b)/b) / Γ(n/b),
    B = e² Γ((n - 1)/b) / Γ(n/b),

minimised at ``u* = B / 2A`` with ``<H>_min = -B² / 4A``. For N = 3 this is
the familiar three-dimensional formula; other N follow from replacing
``2 ell + 1`` by ``2 ell + N - 2`` in every gamma argument.

``expectation_H_quadrature`` rebuilds <H> from radial integrals with the
measure ``r^(N-1) dr`` and serves as an oracle for the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gamma_kernel as gk
from . import quadrature
from .errors import ConvergenceError, DomainError
from .evaluation import Evaluation, Method

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class UnitSystem:
    """Physical constants; the default (1, 1, 1) measures energy in m e⁴/ħ²."""

    hbar: float = 1.0
    mass: float = 1.0
    charge: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0 and self.mass > 0 and self.charge > 0):
            raise DomainError("hbar, mass and charge must all be positive")

    @property
    def energy_unit(self):
        return self.mass * self.charge**4 / self.hbar**2


ATOMIC = UnitSystem()


def _check_level(b, ell, N):
    if not (math.isfinite(b) and b > 0):
        raise DomainError(f"b must be positive, got {b}")
    if int(ell) != ell or ell < 0:
        raise DomainError(f"ell must be a non-negative integer, got {ell}")
    if int(N) != N or N < 3:
        raise DomainError(f"N must be an integer >= 3, got {N}")


@dataclass(frozen=True)
class TrialParams:
    alpha: float
    b: float
    ell: int = 0
    N: int = 3

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0):
            raise DomainError(f"alpha must be positive, got {self.alpha}")
        _check_level(self.b, self.ell, self.N)


@dataclass(frozen=True)
class ExactLevel:
    n_r: int = 0
    ell: int = 0
    N: int = 3

    def __post_init__(self):
        if int(self.n_r) != self.n_r or self.n_r < 0:
            raise DomainError(f"n_r must be a non-negative integer, got {self.n_r}")
        _check_level(1.0, self.ell, self.N)


def quadratic_coefficients(b, ell, N=3, units=ATOMIC):
    """(A, B) such that <H> = A u² - B u with u = (2 alpha)^(1/b)."""
    _check_level(b, ell, N)
    n = 2 * ell + N
    kinetic = (
        units.hbar**2 / (2 * units.mass)
        * b * (n - 2 + b) / 4.0
        * gk.gamma_ratio(((n - 2 + b) / b,), (n / b,))
    )
    potential = units.charge**2 * gk.gamma_ratio(((n - 1) / b,), (n / b,))
    return kinetic, potential


def expectation_H(p, units=ATOMIC):
    """Closed-form energy expectation in the trial state ``p``."""
    A, B = quadratic_coefficients(p.b, p.ell, p.N, units)
    u = (2.0 * p.alpha) ** (1.0 / p.b)
    return A * u * u - B * u


def min_energy_analytic(b, ell, N=3, units=ATOMIC):
    """Minimum over alpha of <H>, and the minimising alpha.

    E_min = -(m e⁴/ħ²) · 2 / (b (2ell + N - 2 + b)) · Γ((2ell+N-1)/b)² / (Γ((2ell+N)/b) Γ((2ell+N-2+b)/b)).
    """
    A, B = quadratic_coefficients(b, ell, N, units)
    n = 2 * ell + N
    log_ratio = gk.log_gamma_ratio(((n - 1) / b, (n - 1) / b), (n / b, (n - 2 + b) / b))
    energy = -units.energy_unit * 2.0 / (b * (n - 2 + b)) * math.exp(log_ratio)
    u_star = B / (2.0 * A)
    return energy, 0.5 * u_star**b


def min_energy_numeric(b, ell, N=3, units=ATOMIC, tol=1e-10):
    """Golden-section minimisation of ``expectation_H`` over ln(alpha).

    The search bracket is [alpha*/10, 10 alpha*] around the analytic
    minimiser; landing on an edge of it is reported as a failure.
    """
    if not 1e-12 < tol < 1e-3:
        raise DomainError(f"tol must lie in (1e-12, 1e-3), got {tol}")
    _, alpha_star = min_energy_analytic(b, ell, N, units)

    def energy(log_alpha):
        return expectation_H(TrialParams(math.exp(log_alpha), b, ell, N), units)

    lo = math.log(alpha_star) - math.log(10.0)
    hi = math.log(alpha_star) + math.log(10.0)
    # E is quadratic in ln(alpha) near the minimum, so alpha carries ~sqrt(tol)
    xtol = max(0.1 * math.sqrt(tol), 1e-9)
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = energy(x1), energy(x2)
    a0, b0 = lo, hi
    while hi - lo > xtol:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = energy(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = energy(x2)
    x = x1 if f1 < f2 else x2
    if x - a0 < 2 * xtol or b0 - x < 2 * xtol:
        raise ConvergenceError(f"minimum touches the search bracket edge at alpha={math.exp(x)}")
    return min(f1, f2), math.exp(x)


def exact_energy(level, units=ATOMIC):
    """-(m e⁴ / 2ħ²) / (n_r + ell + (N-1)/2)²."""
    q = level.n_r + level.ell + 0.5 * (level.N - 1)
    return -0.5 * units.energy_unit / (q * q)


def uncertainty_r2(p):
    """Spread of r² in units of <r²>: sqrt(<r⁴>/<r²>² - 1).

    Independent of alpha; computed with ``expm1`` so the decay at large
    ell is not lost to cancellation.
    """
    n = 2 * p.ell + p.N
    b = p.b
    log_ratio = gk.log_gamma_ratio(((n + 4) / b, n / b), ((n + 2) / b, (n + 2) / b))
    return math.sqrt(math.expm1(log_ratio))


# --- quadrature oracle -----------------------------------------------------

def _log_weight(r, power, alpha, b):
    return power * np.log(r) - 2.0 * alpha * r**b


def _radial_support(power, alpha, b, drop=80.0):
    """Peak location, log peak height and a cutoff radius for r^power e^(-2 alpha r^b)."""
    if power > 0:
        peak = (power / (2.0 * alpha * b)) ** (1.0 / b)
    else:
        peak = (1.0 / (2.0 * alpha)) ** (1.0 / b)
    log_peak = float(_log_weight(np.array(peak), power, alpha, b))
    r_max = 2.0 * peak
    while float(_log_weight(np.array(r_max), power, alpha, b)) > log_peak - drop:
        r_max *= 1.5
    return peak, log_peak, r_max


def _integrate_radial(fn, peak, r_max, rel_tol):
    points = [0.25 * peak, 0.5 * peak, peak, 2.0 * peak]
    return quadrature.integrate(
        fn, 0.0, r_max, abs_tol=0.0, rel_tol=rel_tol, breakpoints=points, max_panels=8000
    )


def radial_moment(power, alpha, b, tol=1e-10):
    """∫₀^∞ r^power exp(-2 alpha r^b) dr by adaptive quadrature.

    The substitution t = 2 alpha r^b turns this into
    Γ((power+1)/b) / (b (2 alpha)^((power+1)/b)), which the tests use as
    the reference.
    """
    if power <= -1:
        raise DomainError(f"moment diverges for power={power}")
    peak, log_peak, r_max = _radial_support(power, alpha, b)
    value, err, panels = _integrate_radial(
        lambda r: np.exp(_log_weight(r, power, alpha, b) - log_peak), peak, r_max, tol
    )
    scale = math.exp(log_peak)
    return Evaluation(value * scale, err * scale, panels, Method.QUADRATURE)


def expectation_H_quadrature(p, units=ATOMIC, tol=1e-8):
    """<H> assembled from radial integrals, independent of the gamma closed form.

    Kinetic energy uses the integrated-by-parts form
    (ħ²/2m) ∫ [R'² + ell(ell+N-2) R²/r²] r^(N-1) dr with the analytic
    logarithmic derivative R'/R = ell/r - alpha b r^(b-1).
    """
    if not 1e-12 < tol < 1e-3:
        raise DomainError(f"tol must lie in (1e-12, 1e-3), got {tol}")
    alpha, b, ell, N = p.alpha, p.b, p.ell, p.N
    power = 2 * ell + N - 1
    peak, log_peak, r_max = _radial_support(power, alpha, b)
    centrifugal = ell * (ell + N - 2)

    def density(r):
        return np.exp(_log_weight(r, power, alpha, b) - log_peak)

    def kinetic_density(r):
        dlog = ell / r - alpha * b * r ** (b - 1.0)
        return density(r) * (dlog * dlog + centrifugal / (r * r))

    inner_tol = 0.05 * tol
    norm, e_norm, n1 = _integrate_radial(density, peak, r_max, inner_tol)
    inv_r, e_inv, n2 = _integrate_radial(lambda r: density(r) / r, peak, r_max, inner_tol)
    kin, e_kin, n3 = _integrate_radial(kinetic_density, peak, r_max, inner_tol)

    kinetic = units.hbar**2 / (2 * units.mass) * kin / norm
    potential = units.charge**2 * inv_r / norm
    value = kinetic - potential
    rel_norm = e_norm / norm
    bound = abs(kinetic) * (e_kin / kin + rel_norm) + abs(potential) * (e_inv / inv_r + rel_norm)
    return Evaluation(value, bound, n1 + n2 + n3, Method.QUADRATURE)
