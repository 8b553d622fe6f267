"""Brouncker's continued fraction and its gamma and product closed forms.

    f(s) = s + 1²/(2s + 3²/(2s + 5²/(2s + ...)))
         = 4 [Γ((3+s)/4) / Γ((1+s)/4)]²
         = (s+1) Π_{n≥1} (s+4n-3)(s+4n+1) / (s+4n-1)²

The product is the reciprocal of the b = 2, a = (s-1)/4 product family,
which ties f(1) = 4/π to the Wallis product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import gamma_kernel as gk
from . import product_engine as pe
from .errors import BudgetExceededError, DomainError
from .evaluation import Evaluation, Method

DEFAULT_MAX_DEPTH = 1 << 22
_START_DEPTH = 8


@dataclass(frozen=True)
class CFSpec:
    """Argument s with either a fixed truncation depth or a target accuracy."""

    s: float
    depth: int | None = None
    tol: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.s) and self.s > 0):
            raise DomainError(f"s must be positive, got {self.s}")
        if self.depth is None and self.tol is None:
            raise DomainError("give a depth or a tol")
        if self.depth is not None and (int(self.depth) != self.depth or self.depth < 1):
            raise DomainError(f"depth must be a positive integer, got {self.depth}")
        if self.tol is not None and not 1e-14 <= self.tol < 1:
            raise DomainError(f"tol must lie in [1e-14, 1), got {self.tol}")


def tail_seed(s, depth):
    """Asymptotic value of the infinite tail that starts at level ``depth``.

    The tail x_j = 2s + (2j+1)²/x_{j+1} behaves like 2j + s + (s+1)²/(4j)
    with an O(j⁻³) remainder.
    """
    return 2.0 * depth + s + (s + 1.0) ** 2 / (4.0 * depth)


def truncate(s, depth, seed=None):
    """Backward recurrence from level ``depth``.

    x_depth = seed (2s by default, i.e. the fraction simply cut off),
    x_j = 2s + (2j+1)²/x_{j+1}, and f = s + 1/x_1. depth = 1 with the
    default seed gives s + 1/(2s).
    """
    two_s = 2.0 * s
    x = two_s if seed is None else float(seed)
    for j in range(int(depth) - 1, 0, -1):
        x = two_s + (2 * j + 1) ** 2 / x
    return s + 1.0 / x


def cf_eval(spec, seeded=None, max_depth=DEFAULT_MAX_DEPTH):
    """Evaluate f(s) by backward recurrence.

    With ``spec.depth`` set the fraction is cut off at that depth. With
    ``spec.tol`` set the depth doubles from 8 until two successive values
    differ by less than tol; the last difference is the error bound.

    Plain truncation converges only like depth^(-s), so in tol mode the
    innermost level is seeded with :func:`tail_seed` unless ``seeded`` is
    False. Fixed-depth mode is unseeded unless ``seeded`` is True.
    """
    s = spec.s
    if spec.tol is None:
        seed = tail_seed(s, spec.depth) if seeded else None
        value = truncate(s, spec.depth, seed)
        return Evaluation(value, math.inf, int(spec.depth), Method.CONTINUED_FRACTION)

    use_seed = True if seeded is None else bool(seeded)

    def at(depth):
        return truncate(s, depth, tail_seed(s, depth) if use_seed else None)

    depth = int(spec.depth) if spec.depth else _START_DEPTH
    prev = at(depth)
    while True:
        depth *= 2
        if depth > max_depth:
            raise BudgetExceededError(f"f({s}) needs depth beyond {max_depth} for tol={spec.tol}")
        cur = at(depth)
        diff = abs(cur - prev)
        if diff < spec.tol:
            return Evaluation(cur, diff, depth, Method.CONTINUED_FRACTION)
        prev = cur


def cf_gamma_form(s):
    """4 [Γ((3+s)/4) / Γ((1+s)/4)]², valid for every s > -1."""
    s = float(s)
    if not (math.isfinite(s) and s > -1):
        raise DomainError(f"gamma form needs s > -1, got {s}")
    return 4.0 * math.exp(2.0 * gk.log_gamma_ratio(((3.0 + s) / 4.0,), ((1.0 + s) / 4.0,)))


def bridge_family(s):
    """ProductFamily(b=2, a=(s-1)/4), whose target is (s+1)/f(s)."""
    return pe.ProductFamily(b=2.0, a=(float(s) - 1.0) / 4.0, N=3)


def cf_product_form(s, tol=1e-10):
    """(s+1) / evaluate(bridge_family(s)), with the bound carried through."""
    s = float(s)
    if not (math.isfinite(s) and s > 0):
        raise DomainError(f"s must be positive, got {s}")
    f = bridge_family(s)
    approx = pe.closed_form_target(f)
    # |δ((s+1)/P)| ≈ (s+1) |δP| / P², so ask the product for tol·P²/(s+1)
    inner_tol = min(max(tol * approx * approx / (s + 1.0), 2e-12), 1e-3)
    ev = pe.evaluate(f, inner_tol)
    value = (s + 1.0) / ev.value
    lo_p = ev.value - ev.error_bound
    bound = (s + 1.0) * ev.error_bound / (lo_p * ev.value) + 4 * pe.EPS * value
    return Evaluation(value, bound, ev.terms_used, Method.TAIL_CORRECTED)


def functional_equation_check(s):
    """f(s-1) f(s+1) / s² from the gamma form; equals 1 for s >= 1.

    s = 1 uses f(0) from the gamma form, where the fraction itself is
    undefined.
    """
    s = float(s)
    if not (math.isfinite(s) and s >= 1):
        raise DomainError(f"functional equation check needs s >= 1, got {s}")
    return cf_gamma_form(s - 1.0) * cf_gamma_form(s + 1.0) / (s * s)
