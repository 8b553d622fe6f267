"""Infinite products for Γ(x)Γ(y)/Γ((x+y)/2)².

A :class:`ProductFamily` ``(b, a, N)`` stands for the identity

    Γ(c1) Γ(c3) / Γ(c2)² = P · Π_{k≥1} (kb + 2a + N - 1)² / ((kb + 2a - b + N)(kb + 2a + b + N - 2))

with ``c1, c2, c3 = (2a+N-2)/b, (2a+N-1)/b, (2a+N)/b`` and the prefactor
``P = (2a+N-1)² / ((2a+N-2)(2a+N-2+b))``. N = 3 is the three-dimensional
case and b = 2, a = 0 is Wallis' product for π/2.

Every factor can be written ``x² / (x² - d²)`` with ``x = kb + 2a + N - 1``
and ``d = b - 1``, so ``ln term = Σ_j d^(2j) / (j x^(2j))`` is a completely
monotone function of k. That makes every Euler-Maclaurin remainder
one-signed and bounded by the next term, which is what
:func:`tail_bound` uses to bracket the infinite tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gamma_kernel as gk
from .errors import BudgetExceededError, DomainError, PreconditionError
from .evaluation import Evaluation, Method

EPS = float(np.finfo(float).eps)
DEFAULT_MAX_TERMS = 10**8
_CHUNK = 1 << 20


@dataclass(frozen=True)
class GammaRatioSpec:
    """The combination Γ(x)Γ(y)/Γ((x+y)/2)²."""

    x: float
    y: float

    def __post_init__(self):
        if not (self.x > 0 and self.y > 0):
            raise DomainError(f"x and y must be positive, got ({self.x}, {self.y})")

    def value(self):
        mid = 0.5 * (self.x + self.y)
        return gk.gamma_ratio((self.x, self.y), (mid, mid))

    def family(self, N=3):
        """The product family whose closed-form target is this ratio."""
        lo, hi = sorted((self.x, self.y))
        if hi == lo:
            raise DomainError("x == y gives the trivial ratio 1, which has no family")
        b = 2.0 / (hi - lo)
        a = 0.5 * (b * lo - N + 2)
        return ProductFamily(b=b, a=a, N=N)


@dataclass(frozen=True)
class ProductFamily:
    """Index (b, a, N) of one product formula.

    Any real ``b > 0`` and ``a`` with ``2a + N - 2 > 0`` is accepted; that keeps
    all three gamma arguments, both prefactor denominators and every factor
    denominator positive. Outside that region construction fails rather
    than extrapolating.
    """

    b: float
    a: float
    N: int = 3

    def __post_init__(self):
        b, a, N = self.b, self.a, self.N
        if not (math.isfinite(b) and b > 0):
            raise DomainError(f"b must be positive and finite, got {b}")
        if not math.isfinite(a):
            raise DomainError(f"a must be finite, got {a}")
        if int(N) != N or N < 3:
            raise DomainError(f"N must be an integer >= 3, got {N}")
        if not 2 * a + N - 2 > 0:
            raise DomainError(
                f"need 2a + N - 2 > 0 so every gamma argument is positive, got a={a}, N={N}"
            )

    @property
    def generalized(self):
        """True outside the derivation's range (even integer b, a in 0..b/2-1)."""
        b, a = self.b, self.a
        even_b = b == int(b) and int(b) % 2 == 0
        return not (even_b and a == int(a) and 0 <= a <= b / 2 - 1)

    @property
    def offset(self):
        """Constant c in x_k = k b + c."""
        return 2 * self.a + self.N - 1

    @property
    def shift(self):
        """d = b - 1, so that term = x² / (x² - d²)."""
        return self.b - 1.0

    @property
    def gamma_args(self):
        b, a, N = self.b, self.a, self.N
        return ((2 * a + N - 2) / b, (2 * a + N - 1) / b, (2 * a + N) / b)

    @property
    def ratio_spec(self):
        c1, _, c3 = self.gamma_args
        return GammaRatioSpec(c1, c3)


def term(f, k):
    """k-th factor (kb + 2a + N - 1)² / ((kb + 2a - b + N)(kb + 2a + b + N - 2))."""
    b, a, N = f.b, f.a, f.N
    num = k * b + 2 * a + N - 1
    den1 = k * b + 2 * a - b + N
    den2 = k * b + 2 * a + b + N - 2
    if den1 == 0 or den2 == 0:
        raise ZeroDivisionError(f"factor {k} of {f} has a vanishing denominator")
    return num * num / (den1 * den2)


def prefactor(f):
    """(2a+N-1)² / ((2a+N-2)(2a+N-2+b))."""
    c = 2 * f.a + f.N - 2
    if c == 0 or c + f.b == 0:
        raise ZeroDivisionError(f"prefactor of {f} has a vanishing denominator")
    return (c + 1) ** 2 / (c * (c + f.b))


def closed_form_target(f):
    """Γ(c1)Γ(c3)/Γ(c2)² evaluated through log-gamma."""
    c1, c2, c3 = f.gamma_args
    return gk.gamma_ratio((c1, c3), (c2, c2))


def log_terms(f, k_start, k_stop):
    """ln term(f, k) for k in [k_start, k_stop) as a numpy array."""
    k = np.arange(k_start, k_stop, dtype=float)
    x = k * f.b + f.offset
    u = f.shift / x
    return -np.log1p(-(u * u))


def _log_partial(f, K):
    # compensated: fsum is exactly rounded, chunked to bound memory
    pieces = []
    for start in range(1, K + 1, _CHUNK):
        pieces.append(math.fsum(log_terms(f, start, min(start + _CHUNK, K + 1)).tolist()))
    return math.fsum(pieces)


def partial_product(f, K, include_prefactor=True):
    """Π_{k=1..K} term(f, k), times the prefactor when requested.

    ``error_bound`` is the distance to the closed-form value of the infinite
    product, so it reports how far the truncation still is from the limit.
    """
    K = int(K)
    if K < 0:
        raise DomainError(f"K must be non-negative, got {K}")
    log_p = _log_partial(f, K)
    pre = prefactor(f) if include_prefactor else 1.0
    value = pre * math.exp(log_p)
    target = closed_form_target(f)
    if not include_prefactor:
        target /= prefactor(f)
    rounding = 8 * EPS * abs(value) * (1.0 + abs(log_p))
    return Evaluation(
        value=value,
        error_bound=abs(target - value) + rounding,
        terms_used=K,
        method=Method.PARTIAL,
    )


def _power_series(u2, coef, rtol=1e-18):
    # Σ_{j≥1} coef(j) u2^j for 0 <= u2 < 1/4
    total = 0.0
    power = 1.0
    j = 0
    while True:
        j += 1
        power *= u2
        t = coef(j) * power
        total += t
        if t <= rtol * total or power == 0.0:
            return total


def log_tail_bracket(step, offset, d, K):
    """Bracket of Σ_{k>K} -ln(1 - d²/x_k²) with x_k = step·k + offset.

    Euler-Maclaurin on [K, ∞), derivatives taken at K:

        Σ_{k>K} g(k) = ∫_K^∞ g - g/2 - g'/12 + g⁽³⁾/720 + R,
        0 <= R <= -g⁽⁵⁾/30240.

    The remainder is one-signed because g is completely monotone. Every
    piece is a convergent series in u = d / x_K, which needs u < 1/2.
    Returns ``(lo, hi)``.
    """
    if not step > 0:
        raise PreconditionError(f"step must be positive, got {step}")
    X = step * K + offset
    if not X > 0 or not abs(d) < 0.5 * X:
        raise PreconditionError(
            f"tail bound needs |d| / x_K < 1/2, got d={d}, x_K={X} at K={K}"
        )
    if d == 0:
        return 0.0, 0.0
    u2 = (d / X) ** 2
    h = step / X
    integral = _power_series(u2, lambda j: 1.0 / (j * (2 * j - 1))) / h
    g = -math.log1p(-u2)
    g1 = -2.0 * h * _power_series(u2, lambda j: 1.0)
    g3 = -2.0 * h**3 * _power_series(u2, lambda j: (2 * j + 1) * (2 * j + 2))
    g5 = -2.0 * h**5 * _power_series(
        u2, lambda j: (2 * j + 1) * (2 * j + 2) * (2 * j + 3) * (2 * j + 4)
    )
    lo = integral - 0.5 * g - g1 / 12.0 + g3 / 720.0
    hi = lo - g5 / 30240.0
    pad = 16 * EPS * (abs(integral) + abs(g) + abs(g1)) + 1e-300
    return max(0.0, lo - pad), hi + pad


def _min_tail_K(f):
    d = abs(f.shift)
    K = max(0, math.floor((2 * d - f.offset) / f.b) + 1)
    while not d < 0.5 * (f.b * K + f.offset):
        K += 1
    return K


def tail_bound(f, K):
    """(lower, upper) bracket of Π_{k>K} term(f, k).

    Padded by two ulps after exponentiation; ``lower >= 1`` always since
    every factor exceeds 1.
    """
    lo, hi = log_tail_bracket(f.b, f.offset, f.shift, int(K))
    return max(1.0, math.exp(lo) * (1 - 2 * EPS)), math.exp(hi) * (1 + 2 * EPS)


def _half_width(f, K, scale):
    lo, hi = log_tail_bracket(f.b, f.offset, f.shift, K)
    return 0.5 * scale * (math.exp(hi) - math.exp(lo))


def evaluate(f, tol=1e-10, max_terms=DEFAULT_MAX_TERMS):
    """Tail-corrected value of prefactor × Π_{k≥1} term(f, k).

    The smallest K whose tail bracket has half-width below ``tol / 2`` is
    found by doubling and bisection on the bracket itself, then the partial
    product up to K is multiplied by the bracket midpoint.
    """
    if not 1e-12 < tol < 1e-2:
        raise DomainError(f"tol must lie in (1e-12, 1e-2), got {tol}")
    scale = abs(closed_form_target(f)) * 1.01
    K = max(_min_tail_K(f), 1)
    if _half_width(f, K, scale) > 0.5 * tol:
        # invariant: lo_K fails, hi_K passes
        lo_K = K
        while _half_width(f, K, scale) > 0.5 * tol:
            lo_K = K
            K *= 2
            if K > max_terms:
                raise BudgetExceededError(f"{f} needs more than {max_terms} factors for tol={tol}")
        hi_K = K
        while hi_K - lo_K > 1:
            mid = (lo_K + hi_K) // 2
            if _half_width(f, mid, scale) > 0.5 * tol:
                lo_K = mid
            else:
                hi_K = mid
        K = hi_K

    log_p = _log_partial(f, K)
    lo, hi = log_tail_bracket(f.b, f.offset, f.shift, K)
    base = prefactor(f) * math.exp(log_p)
    value = base * 0.5 * (math.exp(lo) + math.exp(hi))
    bound = 0.5 * base * (math.exp(hi) - math.exp(lo)) + 8 * EPS * abs(value) * (2.0 + abs(log_p))
    if bound > tol:
        raise BudgetExceededError(f"a posteriori bound {bound:.3e} exceeds tol={tol} for {f}")
    return Evaluation(value=value, error_bound=bound, terms_used=K, method=Method.TAIL_CORRECTED)


def pochhammer_identity_check(f, ell):
    """Both sides of the finite rewrite of the product via Pochhammer symbols.

    Returns ``(lhs, rhs)`` with lhs = Π_{k=1..ell} term(f, k) and
    rhs = (1 + (2a+2)/b)_ell² / (((2a+3)/b)_ell (2 + (2a+1)/b)_ell), for N = 3.
    """
    if f.N != 3:
        raise DomainError("the Pochhammer rewrite is stated for N = 3")
    ell = int(ell)
    if not 0 <= ell <= 30:
        raise DomainError(f"ell must lie in 0..30, got {ell}")
    b, a = f.b, f.a
    lhs = 1.0
    for k in range(1, ell + 1):
        lhs *= term(f, k)
    top = gk.pochhammer(1 + (2 * a + 2) / b, ell)
    rhs = top * top / (gk.pochhammer((2 * a + 3) / b, ell) * gk.pochhammer(2 + (2 * a + 1) / b, ell))
    return lhs, rhs


def gamma_ratio_limit_check(z1, z2, w1, w2, m_list):
    """Γ(z1+m)Γ(z2+m) / (Γ(w1+m)Γ(w2+m)) for each m; tends to 1 when z1+z2 = w1+w2."""
    if abs((z1 + z2) - (w1 + w2)) > 1e-12:
        raise PreconditionError(f"need z1 + z2 == w1 + w2, got {z1 + z2} vs {w1 + w2}")
    out = []
    for m in m_list:
        args = (z1 + m, z2 + m, w1 + m, w2 + m)
        if min(args) <= 0:
            raise PreconditionError(f"shifted arguments must be positive at m={m}")
        out.append(math.exp(gk.log_gamma_ratio(args[:2], args[2:])))
    return out
