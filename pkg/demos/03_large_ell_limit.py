"""
Large angular momentum: the energy ratio tends to one
======================================================

The ratio of the variational minimum to the exact level is a pure gamma
expression in ell. Along ell = a + k b/2 it telescopes into a partial
product, and its limit 1 can be estimated from the first hundred terms.
"""

import math

from gammaprod import correspondence as corr
from gammaprod import product_engine as pe

print("ratio(ell=0, b=2) =", corr.ratio(0, 2), " 8/(3 pi) =", 8 / (3 * math.pi))

print("\n   ell     1 - ratio     ell * (1 - ratio)")
for ell in (1, 10, 100, 1000, 10_000):
    d = 1 - corr.ratio(ell, 2)
    print(f"{ell:6d}   {d:.6e}   {ell * d:.6f}")

# Richardson extrapolation in x = (2 ell + N - 1)/b + 1/2
print("\n  (b, a)   last term        extrapolated     |limit - 1|")
for b, a in ((2, 0), (4, 1), (6, 2), (8, 3)):
    spec = corr.RatioSequenceSpec(b, a, k_max=100)
    seq = corr.ratio_sequence(spec)
    lim = corr.extrapolate_limit(seq, spec.abscissae)
    print(f"  ({b}, {a})   {seq[-1]:.10f}   {lim:.12f}   {abs(lim - 1):.2e}")

# The same numbers from a finite product: ratio(a + K b/2) = partial / target
spec = corr.RatioSequenceSpec(6, 2, k_max=40)
f = corr.derive_product_family(spec)
print(f"\nfamily behind (b=6, a=2): {f}, target {pe.closed_form_target(f):.12f} (pi/3 = {math.pi / 3:.12f})")
for K in (0, 5, 40):
    print(f"  K={K:3d}  partial/target = {pe.partial_product(f, K).value / pe.closed_form_target(f):.14f}"
          f"   ratio = {corr.ratio(2 + 3 * K, 6):.14f}")
