"""
Brouncker's continued fraction three ways
=========================================

f(s) = s + 1/(2s + 9/(2s + 25/(2s + ...)))
     = 4 [Gamma((3+s)/4) / Gamma((1+s)/4)]^2
     = (s+1) / (product family b=2, a=(s-1)/4)
"""

import math

from gammaprod import brouncker_cf as bcf

print("plain truncation at s=1 oscillates around 4/pi =", 4 / math.pi)
for d in (1, 2, 3, 10, 11, 100, 101, 1000):
    print(f"  depth {d:5d}: {bcf.truncate(1.0, d):.10f}")

# Seeding the innermost level with the tail's asymptotics makes the depth
# needed for 1e-8 tiny even for small s, where plain truncation crawls.
print("\n   s    CF (seeded)        gamma form          product form       depth")
for s in (0.5, 1.0, 2.0, 3.0, 7.3):
    cf = bcf.cf_eval(bcf.CFSpec(s, tol=1e-10))
    prod = bcf.cf_product_form(s, 1e-10)
    print(f"{s:5.1f}  {cf.value:.14f}  {bcf.cf_gamma_form(s):.14f}  {prod.value:.14f}  {cf.terms_used}")

print("\nf(s-1) f(s+1) / s^2:")
for s in (1.0, 2.0, 7.3, 31.4):
    print(f"  s={s:5.1f}  {bcf.functional_equation_check(s):.16f}")
