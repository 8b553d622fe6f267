"""
Wallis' product with and without a tail correction
===================================================

The plain partial product creeps towards pi/2 with an error ~ 1/K.
Bracketing the discarded tail turns a handful of factors into nine digits.
"""

import math

from gammaprod import product_engine as pe

wallis = pe.ProductFamily(b=2.0, a=0.0)
print("target pi/2 =", math.pi / 2)

# Plain truncation: one more correct digit per decade of factors.
print("\n     K   partial product      error")
for K in (10, 100, 1000, 10_000, 100_000):
    ev = pe.partial_product(wallis, K)
    print(f"{K:6d}   {ev.value:.12f}   {math.pi / 2 - ev.value:.3e}")

# Tail correction: the factors beyond K are bracketed by an Euler-Maclaurin
# estimate, so the bracket width (not K) controls the error.
print("\n   tol      K   value              |error|     bound")
for tol in (1e-6, 1e-9, 1e-11):
    ev = pe.evaluate(wallis, tol)
    print(f"{tol:.0e}  {ev.terms_used:4d}   {ev.value:.15f}  {abs(ev.value - math.pi / 2):.2e}  {ev.error_bound:.2e}")

# The bracket itself for a few K
print("\n   K   tail lower           tail upper")
for K in (5, 10, 20):
    lo, hi = pe.tail_bound(wallis, K)
    print(f"{K:4d}   {lo:.15f}  {hi:.15f}")

# Any (b, a, N) with positive gamma arguments works, not only the even-b cases.
print("\n   b      a     N   product            gamma target")
for b, a, N in ((3.0, 0.0, 3), (0.7, 1.3, 4), (5.0, -0.3, 3)):
    f = pe.ProductFamily(b, a, N)
    print(f"{b:4.1f}  {a:5.2f}  {N:2d}   {pe.evaluate(f, 1e-10).value:.12f}   {pe.closed_form_target(f):.12f}")
