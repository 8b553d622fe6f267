"""Large-ell limit of variational over exact energies.

For trial exponent b the ratio <H>_min / E_exact tends to 1 as ell grows.
Along the subsequence ell = a + k b/2 every gamma argument moves by an
integer k, so the ratio telescopes into a finite piece of a product
family:

    ratio(a + K b/2) = prefactor · Π_{k≤K} term(k) / target.

That identity is what :func:`derive_product_family` checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import gamma_kernel as gk
from . import product_engine as pe
from .errors import ConvergenceError, DomainError, IdentityCheckError


@dataclass(frozen=True)
class RatioSequenceSpec:
    """Residue class ell ≡ a (mod b/2) with even integer b."""

    b: int
    a: int
    N: int = 3
    k_max: int = 100

    def __post_init__(self):
        if int(self.b) != self.b or self.b < 2 or int(self.b) % 2:
            raise DomainError(f"b must be a positive even integer, got {self.b}")
        if int(self.a) != self.a or not 0 <= self.a < self.b // 2:
            raise DomainError(f"a must be in 0..{self.b // 2 - 1}, got {self.a}")
        if int(self.N) != self.N or self.N < 3:
            raise DomainError(f"N must be an integer >= 3, got {self.N}")
        if int(self.k_max) != self.k_max or self.k_max < 1:
            raise DomainError(f"k_max must be a positive integer, got {self.k_max}")

    @property
    def ells(self):
        half = int(self.b) // 2
        return [int(self.a) + k * half for k in range(int(self.k_max) + 1)]

    @property
    def abscissae(self):
        """(2 ell + N - 1)/b + 1/2 for each ell, the extrapolation variable.

        The ratio is Γ(m)² / (Γ(m - δ) Γ(m + δ)) with m = (2ell+N-1)/b + 1,
        and ψ'(m) expands in odd powers of 1/(m - 1/2), so Richardson in
        this variable converges faster than in ell itself.
        """
        return [(2 * ell + self.N - 1) / self.b + 0.5 for ell in self.ells]


def ratio(ell, b, N=3):
    """<H>_min / E_exact at n_r = 0, as a pure function of ell, b and N.

    (4/b) (ell + (N-1)/2)² / (2 ell + b + N - 2) · Γ((2ell+N-1)/b)² / (Γ((2ell+N)/b) Γ((2ell+b+N-2)/b))
    """
    if int(ell) != ell or ell < 0:
        raise DomainError(f"ell must be a non-negative integer, got {ell}")
    if not b > 0:
        raise DomainError(f"b must be positive, got {b}")
    n = 2 * ell + N
    log_g = gk.log_gamma_ratio(((n - 1) / b, (n - 1) / b), (n / b, (n - 2 + b) / b))
    return (n - 1) ** 2 / (b * (n - 2 + b)) * math.exp(log_g)


def telescoped_ratio(f, K):
    """ratio(a + K b/2) from shifted gamma recursions of the family's arguments.

    With c1, c2, c3 the family's gamma arguments,

        ratio = Γ(c2+1)² / (Γ(c3) Γ(c1+2)) · (c2+1)_K² / ((c3)_K (c1+2)_K),

    every shift evaluated by ``gamma_recursion_shift``.
    """
    c1, c2, c3 = f.gamma_args
    base = gk.log_gamma_ratio((c2 + 1, c2 + 1), (c3, c1 + 2))
    shifts = (
        2 * math.log(gk.gamma_recursion_shift(c2 + 1, K))
        - math.log(gk.gamma_recursion_shift(c3, K))
        - math.log(gk.gamma_recursion_shift(c1 + 2, K))
    )
    return math.exp(base + shifts)


def ratio_sequence(spec):
    """ratio at every ell = a + k b/2, k = 0..k_max."""
    return [ratio(ell, spec.b, spec.N) for ell in spec.ells]


def _pick_doubling(ells, count):
    # indices whose ell roughly halves going backwards from the last entry
    chosen = [len(ells) - 1]
    while len(chosen) < count:
        target = ells[chosen[-1]] / 2.0
        candidates = [i for i in range(chosen[-1]) if ells[i] > 0]
        if not candidates:
            raise DomainError("sequence too short for the requested extrapolation depth")
        chosen.append(min(candidates, key=lambda i: abs(ells[i] - target)))
    return chosen[::-1]


def extrapolate_limit(seq, ells=None, levels=2):
    """Richardson estimate of lim seq assuming seq = L + c1/ell + c2/ell² + ...

    ``ells`` gives the abscissa of each entry; when omitted, consecutive
    entries are taken to double ell. ``levels`` error terms are eliminated
    using ``levels + 1`` entries whose ell roughly doubles, ending at the
    last one.
    """
    seq = [float(v) for v in seq]
    if len(seq) < 3:
        raise DomainError("need at least three sequence entries")
    if ells is None:
        ells = [2.0**i for i in range(len(seq))]
    if len(ells) != len(seq):
        raise DomainError("ells and seq differ in length")
    idx = _pick_doubling(list(map(float, ells)), levels + 1)
    h = [1.0 / ells[i] for i in idx]
    v = [seq[i] for i in idx]

    steps = [abs(v[i + 1] - v[i]) for i in range(len(v) - 1)]
    if any(later > earlier for earlier, later in zip(steps, steps[1:])):
        raise ConvergenceError(f"successive differences {steps} do not decay")

    # Neville's scheme evaluated at h = 0
    table = list(v)
    for m in range(1, len(table)):
        for i in range(len(table) - m):
            table[i] = (h[i + m] * table[i] - h[i] * table[i + 1]) / (h[i + m] - h[i])
    return table[0]


def derive_product_family(spec, check_k=50, rtol=1e-10):
    """Product family generated by the residue class of ``spec``.

    Verifies that prefactor · Π_{k≤K} term(k) / target equals the energy
    ratio at ell = a + K b/2 for every K up to ``min(check_k, k_max)``,
    and raises ``IdentityCheckError`` otherwise.
    """
    f = pe.ProductFamily(b=float(spec.b), a=float(spec.a), N=int(spec.N))
    target = pe.closed_form_target(f)
    half = int(spec.b) // 2
    for K in range(min(check_k, spec.k_max) + 1):
        via_product = pe.partial_product(f, K).value / target
        via_energy = ratio(int(spec.a) + K * half, spec.b, spec.N)
        if abs(via_product / via_energy - 1.0) > rtol:
            raise IdentityCheckError(
                f"telescoping fails at K={K}: {via_product!r} vs {via_energy!r}"
            )
    return f
