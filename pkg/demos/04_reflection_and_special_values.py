"""
Reflection formula and named product values
===========================================

Choosing a = b/2 - 1 gives products for Gamma(1 - 1/b) Gamma(1/b), hence
pi / sin(pi / b). A few (b, a) choices produce familiar constants.
"""

import math

from gammaprod import identities as ids

print("  b   product side        pi/sin(pi/b)")
for b in (2, 4, 6, 8, 16, 64):
    ev = ids.reflection_product_rhs(b, 1e-10)
    print(f"{b:3d}   {ev.value:.12f}    {math.pi / math.sin(math.pi / b):.12f}")

print("\nGamma(1-z) Gamma(z) sin(pi z)/pi at a few z:")
for z in (0.5, 0.25, 0.37, -1.3):
    print(f"  z={z:5}  {ids.reflection_check(z):.16f}")

# Sine product -(z-1) prod (1 - (z-1)^2/k^2) with a bracketed tail
print("\nsine product at z = 1/4 vs sin(pi/4)/pi =", math.sin(math.pi / 4) / math.pi)
for K in (10, 100, 10_000):
    ev = ids.sine_product(0.25, K)
    print(f"  K={K:6d}  {ev.value:.15f}  +- {ev.error_bound:.1e}")

print("\nnamed values")
for sv in ids.all_special_values():
    ev = sv.from_product(1e-10)
    print(f"  {sv.label:18s} b={sv.family.b:4g} a={sv.family.a:4g}  {ev.value:.12f}  target {sv.target:.12f}")

print("\nB6_A0 closed forms:", ids.b6_a0_gamma_form(), ids.b6_a0_radical_form())

print("\nnested radical for sin(pi/2^n)")
for n in (3, 4, 10, 25):
    print(f"  n={n:2d}  {ids.nested_radical_sin(n):.17g}  {math.sin(math.pi / 2**n):.17g}")

print("\nhalf-shifted variant: product / (1/cos(pi/b))")
for b in (4, 6, 10):
    print(f"  b={b:2d}  {ids.half_shift_reflection_check(b, 1e-10):.12f}")
