"""Reflection formula checks and named special values of the product families."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import gamma_kernel as gk
from . import product_engine as pe
from .errors import DomainError, PoleError, IdentityCheckError
from .evaluation import Evaluation, Method


def _check_even(b, minimum=2):
    if int(b) != b or b < minimum or int(b) % 2:
        raise DomainError(f"b must be an even integer >= {minimum}, got {b}")
    return int(b)


def reflection_family(b):
    """Family with a = b/2 - 1, whose target is Γ(1 - 1/b) Γ(1 + 1/b)."""
    b = _check_even(b)
    return pe.ProductFamily(b=float(b), a=b / 2 - 1.0, N=3)


def reflection_product_rhs(b, tol=1e-10):
    """b³/((b-1)(2b-1)) · Π_{k≥1} (kb+b)² / ((kb+1)(kb+2b-1)), tail-corrected.

    This is b times the a = b/2 - 1 family, using Γ(1 + 1/b) = Γ(1/b)/b,
    and equals Γ(1 - 1/b) Γ(1/b).
    """
    b = _check_even(b)
    ev = pe.evaluate(reflection_family(b), tol / b)
    return Evaluation(b * ev.value, b * ev.error_bound, ev.terms_used, ev.method)


def reflection_check(z, tol=None):
    """Γ(1 - z) Γ(z) sin(πz) / π, which should be 1 for non-integer z.

    With ``tol`` given, a departure from 1 larger than tol raises
    ``IdentityCheckError``.
    """
    z = float(z)
    if z == math.floor(z):
        raise PoleError(f"reflection is undefined at integer z = {z:g}")
    value = gk.gamma(z) * gk.gamma(1.0 - z) * gk.sinpi(z) / math.pi
    if tol is not None and not abs(value - 1.0) <= tol:
        raise IdentityCheckError(f"reflection at z={z!r} gives {value!r}")
    return value


def _signed_log_head(w, nodes):
    # sign and ln|.| of Π (1 - w²/x²) over the given nodes
    sign = 1.0
    logs = []
    for x in nodes:
        factor = 1.0 - (w / x) ** 2
        if factor == 0.0:
            return 0.0, 0.0
        if factor < 0.0:
            sign = -sign
        logs.append(math.log1p(-(w / x) ** 2) if factor > 0.5 else math.log(abs(factor)))
    return sign, math.fsum(logs)


def _with_tail(base_sign, log_head, lo, hi, K):
    # combine an exact head with the reciprocal of a bracketed tail
    if base_sign == 0.0:
        return Evaluation(0.0, 0.0, K, Method.TAIL_CORRECTED)
    base = base_sign * math.exp(log_head)
    value = base * 0.5 * (math.exp(-lo) + math.exp(-hi))
    bound = 0.5 * abs(base) * (math.exp(-lo) - math.exp(-hi)) + 8 * pe.EPS * abs(value) * (2 + abs(log_head))
    return Evaluation(value, bound, K, Method.TAIL_CORRECTED)


def sine_product(z, K):
    """Tail-corrected -(z-1) Π_{k≥1} (1 - (z-1)²/k²), which equals sin(πz)/π.

    The first K factors are multiplied out; the rest are bracketed with the
    same Euler-Maclaurin machinery as the product families (each factor is
    the reciprocal of x²/(x² - d²) with x = k, d = z - 1).
    """
    w = float(z) - 1.0
    K = int(K)
    if not abs(w) < 0.5 * K:
        raise DomainError(f"need |z - 1| < K/2 for the tail bracket, got z={z}, K={K}")
    sign, log_head = _signed_log_head(w, range(1, K + 1))
    lo, hi = pe.log_tail_bracket(1.0, 0.0, w, K)
    return _with_tail(-w * sign, log_head, lo, hi, K)


def nested_radical_sin(n):
    """sin(π/2ⁿ) = ½ √(2 - √(2 + √(2 + ... √2))) with n - 2 radicals inside.

    Evaluated from the innermost √2 outwards. The outermost ``2 - s`` is
    carried as a quotient (see ``_two_minus_sqrt_chain``) since s tends to 2
    and direct subtraction would lose about 2n bits.
    """
    if int(n) != n or n < 3:
        raise DomainError(f"n must be an integer >= 3, got {n}")
    return 0.5 * math.sqrt(_two_minus_sqrt_chain(int(n) - 2))


def _two_minus_sqrt_chain(depth):
    # 2 - √(2 + √(2 + ... √2)) with ``depth`` radicals, without cancellation:
    # 2 - √(2 + t) = (2 - t) / (2 + √(2 + t))
    t = math.sqrt(2.0)
    two_minus = 2.0 - t
    for _ in range(depth - 1):
        s = math.sqrt(2.0 + t)
        two_minus = two_minus / (2.0 + s)
        t = s
    return two_minus


def half_shift_family(b):
    """Family a = 0, N = b/2 + 1 of the half-shifted reflection variation."""
    b = _check_even(b, minimum=4)
    return pe.ProductFamily(b=float(b), a=0.0, N=b // 2 + 1)


def half_shift_reflection_check(b, tol=1e-10):
    """Product side over closed-form side of (1/π) Γ(1/2 + 1/b) Γ(1/2 - 1/b).

    The product side is (b/2)²/((b/2-1)(3b/2-1)) Π (kb+b/2)²/((kb+1-b/2)(kb+3b/2-1)),
    evaluated with tail correction. The closed form is 1/cos(π/b), reached
    through reflection at z = 1/2 - 1/b; that it also matches the gamma
    expression is checked here to 1e-12.
    """
    b = _check_even(b, minimum=4)
    f = half_shift_family(b)
    closed = 1.0 / math.cos(math.pi / b)
    via_gamma = gk.gamma(0.5 + 1.0 / b) * gk.gamma(0.5 - 1.0 / b) / math.pi
    if abs(via_gamma / closed - 1.0) > 1e-12:
        raise IdentityCheckError(f"reflection at z = 1/2 - 1/{b} gives {via_gamma}, expected {closed}")
    ev = pe.evaluate(f, tol)
    return ev.value / closed


def half_shift_sine_product(z, K):
    """[4(z+½)² - 1]/π · Π_{k≥1} (1 - (z+½)²/(k+½)²), which equals 1/(Γ(1-z)Γ(z))."""
    w = float(z) + 0.5
    K = int(K)
    if not abs(w) < 0.5 * (K + 0.5):
        raise DomainError(f"need |z + 1/2| < (K + 1/2)/2, got z={z}, K={K}")
    sign, log_head = _signed_log_head(w, (k + 0.5 for k in range(1, K + 1)))
    lo, hi = pe.log_tail_bracket(1.0, 0.5, w, K)
    return _with_tail((4 * w * w - 1) / math.pi * sign, log_head, lo, hi, K)


class Case(str, enum.Enum):
    WALLIS = "WALLIS"
    CATALAN_PI_2SQRT2 = "CATALAN_PI_2SQRT2"
    SQRT2 = "SQRT2"
    B6_A0 = "B6_A0"
    PI_3 = "PI_3"
    EIGHTS = "EIGHTS"
    POW2 = "POW2"


@dataclass(frozen=True)
class SpecialValue:
    """A named closed form and how to read it off a product family.

    ``target == scale * evaluate(family) / (prefactor if divide_prefactor else 1)``.
    """

    case: Case
    target: float
    family: pe.ProductFamily
    scale: float = 1.0
    divide_prefactor: bool = False
    chain: str = "target = product with its prefactor"
    n: int | None = None

    @property
    def label(self):
        return f"{self.case.value}({self.n})" if self.n is not None else self.case.value

    def from_product(self, tol=1e-10):
        """Product-side Evaluation of ``target``."""
        pre = pe.prefactor(self.family) if self.divide_prefactor else 1.0
        factor = self.scale / pre
        ev = pe.evaluate(self.family, tol / abs(factor) if abs(factor) > 1 else tol)
        return Evaluation(factor * ev.value, abs(factor) * ev.error_bound, ev.terms_used, ev.method)


def b6_a0_gamma_form():
    """7 √π Γ(1/6) / (4 Γ(1/3)²)."""
    return 7.0 * math.sqrt(math.pi) * gk.gamma_ratio((1 / 6,), (1 / 3, 1 / 3)) / 4.0


def b6_a0_radical_form():
    """7 √3 / (4 · 2^(1/3))."""
    return 7.0 * math.sqrt(3.0) / (4.0 * 2.0 ** (1.0 / 3.0))


def special_value(case, n=None):
    """Closed-form target, generating family and prefactor chain of a named case."""
    case = Case(case)
    if case is Case.WALLIS:
        return SpecialValue(case, math.pi / 2, pe.ProductFamily(2.0, 0.0))
    if case is Case.CATALAN_PI_2SQRT2:
        return SpecialValue(case, math.pi / (2 * math.sqrt(2.0)), pe.ProductFamily(4.0, 1.0))
    if case is Case.SQRT2:
        return SpecialValue(case, math.sqrt(2.0), pe.ProductFamily(4.0, 0.0))
    if case is Case.B6_A0:
        return SpecialValue(
            case, b6_a0_radical_form(), pe.ProductFamily(6.0, 0.0),
            divide_prefactor=True, chain="target = product / prefactor (4/7)",
        )
    if case is Case.PI_3:
        return SpecialValue(case, math.pi / 3, pe.ProductFamily(6.0, 2.0))
    if case is Case.EIGHTS:
        s = math.sqrt(2.0 - math.sqrt(2.0))
        return SpecialValue(case, math.pi / (4 * s), pe.ProductFamily(8.0, 3.0))
    if n is None or int(n) != n or n < 3:
        raise DomainError(f"POW2 needs an integer n >= 3, got {n}")
    n = int(n)
    b = 2**n
    return SpecialValue(
        case,
        2 * math.pi / math.sqrt(_two_minus_sqrt_chain(n - 2)),
        pe.ProductFamily(float(b), b / 2 - 1.0),
        scale=float(b),
        chain=f"target = {b} x product with its prefactor",
        n=n,
    )


def all_special_values(pow2=(3, 4, 5)):
    cases = [special_value(c) for c in Case if c is not Case.POW2]
    return cases + [special_value(Case.POW2, n) for n in pow2]
